//! Brute-force index definitions: every value here is a direct sum over
//! unordered vertex pairs of a BFS distance matrix. These are the ground
//! truth the structural methods are checked against.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::weight::{ones, Weight};

/// A graph with two positive vertex weights `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleWeightedGraph<T> {
    graph: Graph,
    a: Vec<T>,
    b: Vec<T>,
}

impl<T: Weight> DoubleWeightedGraph<T> {
    pub fn new(graph: Graph, a: Vec<T>, b: Vec<T>) -> Result<Self> {
        check_weights(&graph, &a)?;
        check_weights(&graph, &b)?;
        for (vertex, (x, y)) in a.iter().zip(&b).enumerate() {
            if *x <= T::zero() || *y <= T::zero() {
                return Err(Error::NonPositiveWeight { vertex });
            }
        }
        Ok(Self { graph, a, b })
    }

    /// `(G, a, 1)`.
    pub fn single(graph: Graph, a: Vec<T>) -> Result<Self> {
        let b = ones(graph.vertex_count());
        Self::new(graph, a, b)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    pub fn into_parts(self) -> (Graph, Vec<T>, Vec<T>) {
        (self.graph, self.a, self.b)
    }
}

pub(crate) fn check_weights<T>(g: &Graph, w: &[T]) -> Result<()> {
    if w.len() != g.vertex_count() {
        return Err(Error::WeightLength {
            expected: g.vertex_count(),
            found: w.len(),
        });
    }
    Ok(())
}

pub fn degrees_as<T: Weight>(g: &Graph) -> Vec<T> {
    (0..g.vertex_count())
        .map(|u| T::from_count(g.degree(u) as u64))
        .collect()
}

/// Pairwise sums over a fixed distance matrix.
#[derive(Clone, Debug)]
pub struct Oracle<'g> {
    graph: &'g Graph,
    distances: Cow<'g, DistanceMatrix>,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            distances: Cow::Owned(all_pairs_distances(graph)),
        }
    }

    pub fn with_distances(graph: &'g Graph, distances: &'g DistanceMatrix) -> Self {
        assert_eq!(graph.vertex_count(), distances.size());
        Self {
            graph,
            distances: Cow::Borrowed(distances),
        }
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    fn pair_sum<T: Weight>(&self, mut term: impl FnMut(usize, usize) -> T) -> T {
        let n = self.graph.vertex_count();
        let mut total = T::zero();
        for u in 0..n {
            let row = self.distances.row(u);
            for (v, &d) in row.iter().enumerate().skip(u + 1) {
                total += term(u, v) * T::from_count(d as u64);
            }
        }
        total
    }

    pub fn wiener(&self) -> i128 {
        self.pair_sum(|_, _| 1i128)
    }

    pub fn wiener_weighted<T: Weight>(&self, w: &[T]) -> Result<T> {
        check_weights(self.graph, w)?;
        Ok(self.pair_sum(|u, v| w[u] * w[v]))
    }

    pub fn wiener_plus<T: Weight>(&self, w: &[T]) -> Result<T> {
        check_weights(self.graph, w)?;
        Ok(self.pair_sum(|u, v| w[u] + w[v]))
    }

    pub fn wiener_double<T: Weight>(&self, a: &[T], b: &[T]) -> Result<T> {
        check_weights(self.graph, a)?;
        check_weights(self.graph, b)?;
        Ok(self.pair_sum(|u, v| a[u] * b[v] + a[v] * b[u]))
    }

    pub fn degree_distance(&self) -> i128 {
        let deg = degrees_as::<i128>(self.graph);
        self.pair_sum(|u, v| deg[u] + deg[v])
    }

    pub fn gutman(&self) -> i128 {
        let deg = degrees_as::<i128>(self.graph);
        self.pair_sum(|u, v| deg[u] * deg[v])
    }
}

/// `W(G)`: sum of distances over unordered pairs.
pub fn wiener(g: &Graph) -> i128 {
    Oracle::new(g).wiener()
}

/// `W(G,w) = Σ w(u)w(v)d(u,v)`.
pub fn wiener_weighted<T: Weight>(g: &Graph, w: &[T]) -> Result<T> {
    check_weights(g, w)?;
    Oracle::new(g).wiener_weighted(w)
}

/// `W₊(G,w) = Σ (w(u)+w(v))d(u,v)`.
pub fn wiener_plus<T: Weight>(g: &Graph, w: &[T]) -> Result<T> {
    check_weights(g, w)?;
    Oracle::new(g).wiener_plus(w)
}

/// `W(G,a,b) = Σ (a(u)b(v)+a(v)b(u))d(u,v)`.
pub fn wiener_double<T: Weight>(dwg: &DoubleWeightedGraph<T>) -> T {
    Oracle::new(dwg.graph())
        .wiener_double(dwg.a(), dwg.b())
        .expect("weights validated on construction")
}

/// Degree distance `DD(G)`.
pub fn degree_distance(g: &Graph) -> i128 {
    Oracle::new(g).degree_distance()
}

/// Gutman index `Gut(G)`.
pub fn gutman(g: &Graph) -> i128 {
    Oracle::new(g).gutman()
}
