//! Weighted Wiener indices from quotient graphs over a partition coarser
//! than the Θ*-partition.
//!
//! For such a partition `{F_1, ..., F_r}` the distance in `G` splits as the
//! sum of distances in the quotients `G/F_i`, and the weighted indices split
//! accordingly once each quotient vertex carries the summed weight of its
//! component.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::indices::{check_weights, degrees_as, DoubleWeightedGraph, Oracle};
use crate::theta::{
    is_partial_cube_with, quotient_masked, theta_star_classes_with, EdgePartition, QuotientGraph,
};
use crate::weight::{ones, Weight};

/// A quotient `G/F_i` with its distance matrix.
#[derive(Clone, Debug)]
pub struct BlockQuotient {
    quotient: QuotientGraph,
    distances: DistanceMatrix,
}

impl BlockQuotient {
    pub fn quotient(&self) -> &QuotientGraph {
        &self.quotient
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    /// Component sums of `a` and `b`.
    pub fn weighted<T: Weight>(&self, a: &[T], b: &[T]) -> WeightedQuotient<'_, T> {
        let components = self.quotient.components();
        WeightedQuotient {
            block: self,
            a: components.aggregate(|x| a[x]),
            b: components.aggregate(|x| b[x]),
        }
    }
}

/// `(G/F_i, a_i, b_i)` with `a_i(C) = Σ_{x∈C} a(x)` and likewise for `b`.
#[derive(Clone, Debug)]
pub struct WeightedQuotient<'q, T> {
    block: &'q BlockQuotient,
    pub a: Vec<T>,
    pub b: Vec<T>,
}

impl<T: Weight> WeightedQuotient<'_, T> {
    fn oracle(&self) -> Oracle<'_> {
        Oracle::with_distances(self.block.quotient.graph(), &self.block.distances)
    }

    pub fn quotient(&self) -> &QuotientGraph {
        &self.block.quotient
    }

    /// `W(G/F_i, a_i, b_i)`.
    pub fn wiener_double(&self) -> T {
        self.oracle()
            .wiener_double(&self.a, &self.b)
            .expect("component sums")
    }

    /// `W(G/F_i, a_i)`.
    pub fn wiener_weighted(&self) -> T {
        self.oracle()
            .wiener_weighted(&self.a)
            .expect("component sums")
    }
}

/// The quotients of `G` over every block of a coarser partition.
#[derive(Clone, Debug)]
pub struct CutDecomposition {
    vertex_count: usize,
    blocks: Vec<BlockQuotient>,
}

impl CutDecomposition {
    pub fn new(g: &Graph, partition: &EdgePartition) -> Result<Self> {
        if partition.edge_count() != g.edge_count() {
            return Err(Error::PartitionMismatch {
                expected: g.edge_count(),
                found: partition.edge_count(),
            });
        }
        let blocks = partition
            .blocks()
            .par_iter()
            .map(|block| {
                let mut mask = vec![false; g.edge_count()];
                for &e in block {
                    mask[e] = true;
                }
                let quotient = quotient_masked(g, &mask);
                let distances = all_pairs_distances(quotient.graph());
                BlockQuotient {
                    quotient,
                    distances,
                }
            })
            .collect();
        Ok(Self {
            vertex_count: g.vertex_count(),
            blocks,
        })
    }

    pub fn blocks(&self) -> &[BlockQuotient] {
        &self.blocks
    }

    /// `Σ_i d_{G/F_i}(ℓ_i(u), ℓ_i(v))`.
    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.blocks
            .iter()
            .map(|b| b.distances.get(b.quotient.ell(u), b.quotient.ell(v)))
            .sum()
    }

    /// Per-block `W(G/F_i, a_i, b_i)`.
    pub fn wiener_double_terms<T: Weight>(&self, a: &[T], b: &[T]) -> Result<Vec<T>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self
            .blocks
            .iter()
            .map(|blk| blk.weighted(a, b).wiener_double())
            .collect())
    }

    /// Per-block `W(G/F_i, w_i)`.
    pub fn wiener_weighted_terms<T: Weight>(&self, w: &[T]) -> Result<Vec<T>> {
        self.check(w)?;
        Ok(self
            .blocks
            .iter()
            .map(|blk| blk.weighted(w, w).wiener_weighted())
            .collect())
    }

    fn check<T>(&self, w: &[T]) -> Result<()> {
        if w.len() != self.vertex_count {
            return Err(Error::WeightLength {
                expected: self.vertex_count,
                found: w.len(),
            });
        }
        Ok(())
    }
}

/// `d_G(u,v)` as a sum of quotient distances.
pub fn distance_via_quotients(
    g: &Graph,
    partition: &EdgePartition,
    u: usize,
    v: usize,
) -> Result<u32> {
    for x in [u, v] {
        if x >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: g.vertex_count(),
            });
        }
    }
    Ok(CutDecomposition::new(g, partition)?.distance(u, v))
}

/// `W(G,w) = Σ_i W(G/F_i, w_i)`.
pub fn wiener_weighted_via_cuts<T: Weight>(
    g: &Graph,
    w: &[T],
    partition: &EdgePartition,
) -> Result<T> {
    check_weights(g, w)?;
    Ok(CutDecomposition::new(g, partition)?
        .wiener_weighted_terms(w)?
        .into_iter()
        .sum())
}

/// `W(G,a,b) = Σ_i W(G/F_i, a_i, b_i)`.
pub fn wiener_double_via_cuts<T: Weight>(
    dwg: &DoubleWeightedGraph<T>,
    partition: &EdgePartition,
) -> Result<T> {
    Ok(CutDecomposition::new(dwg.graph(), partition)?
        .wiener_double_terms(dwg.a(), dwg.b())?
        .into_iter()
        .sum())
}

/// `DD(G)` with `a_i(C)` the degree sum and `b_i(C) = |C|`.
pub fn degree_distance_via_cuts(g: &Graph, partition: &EdgePartition) -> Result<i128> {
    let deg = degrees_as::<i128>(g);
    let unit = ones::<i128>(g.vertex_count());
    Ok(CutDecomposition::new(g, partition)?
        .wiener_double_terms(&deg, &unit)?
        .into_iter()
        .sum())
}

/// `Gut(G) = Σ_i W(G/F_i, a_i)` with `a_i(C)` the degree sum.
pub fn gutman_via_cuts(g: &Graph, partition: &EdgePartition) -> Result<i128> {
    let deg = degrees_as::<i128>(g);
    wiener_weighted_via_cuts(g, &deg, partition)
}

/// On a partial cube every Θ-class splits `G` into two sides `C¹`, `C²`, and
/// `W(G,a,b) = Σ_classes A₁B₂ + A₂B₁`.
pub fn partial_cube_double_wiener<T: Weight>(dwg: &DoubleWeightedGraph<T>) -> Result<T> {
    let g = dwg.graph();
    let d = all_pairs_distances(g);
    let classes = theta_star_classes_with(g, &d);
    if !is_partial_cube_with(g, &d, &classes) {
        return Err(Error::NotPartialCube);
    }
    let mut total = T::zero();
    for class in classes.iter() {
        let components = g.components_after_deletion(class)?;
        debug_assert_eq!(components.count(), 2);
        let a = components.aggregate(|x| dwg.a()[x]);
        let b = components.aggregate(|x| dwg.b()[x]);
        total += a[0] * b[1] + a[1] * b[0];
    }
    Ok(total)
}
