//! The Djoković–Winkler relation, its transitive closure, coarser edge
//! partitions and quotient graphs.

use rayon::prelude::*;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Components, DistanceMatrix, Graph};

/// Whether edges `e1` and `e2` (by id) are in relation Θ:
/// `d(u1,u2) + d(v1,v2) != d(u1,v2) + d(v1,u2)`.
pub fn theta_related(g: &Graph, d: &DistanceMatrix, e1: usize, e2: usize) -> Result<bool> {
    let (u1, v1) = g.edge(e1)?;
    let (u2, v2) = g.edge(e2)?;
    Ok(theta(d, (u1, v1), (u2, v2)))
}

#[inline]
fn theta(d: &DistanceMatrix, (u1, v1): (usize, usize), (u2, v2): (usize, usize)) -> bool {
    d.get(u1, u2) + d.get(v1, v2) != d.get(u1, v2) + d.get(v1, u2)
}

/// The Θ*-partition of the edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaClasses {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl ThetaClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    /// Edge ids of class `c`, ascending.
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.classes.iter().map(Vec::as_slice)
    }

    /// One line per class, edges written `u-v` in sorted order.
    pub fn dump(&self, g: &Graph) -> String {
        let mut out = String::new();
        for class in &self.classes {
            let mut edges: Vec<_> = class.iter().map(|&e| g.edges()[e]).collect();
            edges.sort_unstable();
            out.push_str(&format_edges(&edges));
            out.push('\n');
        }
        out
    }
}

pub(crate) fn format_edges(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Θ*-classes of a connected graph.
pub fn theta_star_classes(g: &Graph) -> ThetaClasses {
    theta_star_classes_with(g, &all_pairs_distances(g))
}

/// Θ*-classes from precomputed distances. Every edge pair is tested; related
/// pairs are merged in ascending `(e1, e2)` order.
pub fn theta_star_classes_with(g: &Graph, d: &DistanceMatrix) -> ThetaClasses {
    let edges = g.edges();
    let m = edges.len();
    let related: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|i| {
            ((i + 1)..m)
                .filter(|&j| theta(d, edges[i], edges[j]))
                .collect()
        })
        .collect();
    let mut dsu = DisjointSet::new(m);
    for (i, row) in related.iter().enumerate() {
        for &j in row {
            dsu.union(i, j);
        }
    }
    let (class_of, classes) = dsu.groups();
    ThetaClasses { class_of, classes }
}

/// A partition of the edge set into blocks, each a union of whole
/// Θ*-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl EdgePartition {
    /// The Θ*-partition itself, the finest coarser partition.
    pub fn finest(classes: &ThetaClasses) -> EdgePartition {
        EdgePartition {
            blocks: classes.classes.clone(),
            block_of: classes.class_of.clone(),
        }
    }

    /// Accepts structurally known blocks (e.g. phenylene direction classes)
    /// after only the partition check. Debug builds revalidate against Θ*
    /// on graphs small enough for the quadratic scan.
    pub fn trusted(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<EdgePartition> {
        let partition = check_partition(g, blocks)?;
        #[cfg(debug_assertions)]
        if g.edge_count() <= TRUSTED_REVALIDATION_LIMIT {
            let classes = theta_star_classes(g);
            if let Err(e) = check_unions(g, &classes, &partition.block_of) {
                panic!("trusted partition is not coarser than Theta*: {e}");
            }
        }
        Ok(partition)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, edge: usize) -> usize {
        self.block_of[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.block_of.len()
    }

    /// Merges blocks with the same `group` label; the result is again
    /// coarser than Θ*. Blocks are ordered by first appearance of the label.
    pub fn merge(&self, group: &[usize]) -> EdgePartition {
        let mut index_of = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            let next = blocks.len();
            let slot = *index_of.entry(group[i]).or_insert(next);
            if slot == next {
                blocks.push(Vec::new());
            }
            blocks[slot].extend_from_slice(block);
        }
        let mut block_of = vec![0; self.block_of.len()];
        for (b, block) in blocks.iter_mut().enumerate() {
            block.sort_unstable();
            for &e in block.iter() {
                block_of[e] = b;
            }
        }
        EdgePartition { blocks, block_of }
    }
}

#[cfg(debug_assertions)]
const TRUSTED_REVALIDATION_LIMIT: usize = 2000;

fn check_partition(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<EdgePartition> {
    let m = g.edge_count();
    let mut block_of = vec![usize::MAX; m];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::NotAPartition(format!("block {b} is empty")));
        }
        for &e in block {
            if e >= m {
                return Err(Error::UnknownEdgeId(e));
            }
            if block_of[e] != usize::MAX {
                let (u, v) = g.edges()[e];
                return Err(Error::NotAPartition(format!(
                    "edge {u}-{v} appears in blocks {} and {b}",
                    block_of[e]
                )));
            }
            block_of[e] = b;
        }
    }
    if let Some(e) = block_of.iter().position(|&b| b == usize::MAX) {
        let (u, v) = g.edges()[e];
        return Err(Error::NotAPartition(format!("edge {u}-{v} is not covered")));
    }
    let blocks = blocks
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect();
    Ok(EdgePartition { blocks, block_of })
}

fn check_unions(g: &Graph, classes: &ThetaClasses, block_of: &[usize]) -> Result<()> {
    for (c, class) in classes.iter().enumerate() {
        let first = block_of[class[0]];
        if class.iter().any(|&e| block_of[e] != first) {
            let edges: Vec<_> = class.iter().map(|&e| g.edges()[e]).collect();
            return Err(Error::ClassSplit {
                class: c,
                edges: format_edges(&edges),
            });
        }
    }
    Ok(())
}

/// Validates that `blocks` partition the edges of `g` and that no Θ*-class
/// is split across two blocks.
pub fn validate_coarser(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<EdgePartition> {
    validate_coarser_with(g, &theta_star_classes(g), blocks)
}

pub fn validate_coarser_with(
    g: &Graph,
    classes: &ThetaClasses,
    blocks: Vec<Vec<usize>>,
) -> Result<EdgePartition> {
    let partition = check_partition(g, blocks)?;
    check_unions(g, classes, &partition.block_of)?;
    Ok(partition)
}

/// `G/F` together with the map sending each vertex of `G` to its component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    graph: Graph,
    components: Components,
}

impl QuotientGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    /// The quotient vertex containing `u`.
    pub fn ell(&self, u: usize) -> usize {
        self.components.component_of(u)
    }
}

/// Builds `G/F` for an edge subset given by ids. Runs in `O(n + m)`.
pub fn quotient(g: &Graph, f: &[usize]) -> Result<QuotientGraph> {
    let mut mask = vec![false; g.edge_count()];
    for &e in f {
        if e >= g.edge_count() {
            return Err(Error::UnknownEdgeId(e));
        }
        mask[e] = true;
    }
    Ok(quotient_masked(g, &mask))
}

pub(crate) fn quotient_masked(g: &Graph, deleted: &[bool]) -> QuotientGraph {
    let components = g.components_masked(deleted);
    let r = components.count();
    let mut seen = vec![usize::MAX; r];
    let mut edges = Vec::new();
    for (c, members) in components.iter().enumerate() {
        for &u in members {
            for &(v, e) in g.incident(u) {
                if !deleted[e] {
                    continue;
                }
                let d = components.component_of(v);
                if d > c && seen[d] != c {
                    seen[d] = c;
                    edges.push((c, d));
                }
            }
        }
    }
    let graph =
        Graph::new(r, edges).expect("quotient of a connected graph is simple and connected");
    QuotientGraph { graph, components }
}

/// Bipartite and every Θ*-class is a Θ-clique (Θ = Θ*).
pub fn is_partial_cube(g: &Graph) -> bool {
    if !g.is_bipartite() {
        return false;
    }
    let d = all_pairs_distances(g);
    let classes = theta_star_classes_with(g, &d);
    is_partial_cube_with(g, &d, &classes)
}

pub(crate) fn is_partial_cube_with(g: &Graph, d: &DistanceMatrix, classes: &ThetaClasses) -> bool {
    if !g.is_bipartite() {
        return false;
    }
    let edges = g.edges();
    classes.iter().all(|class| {
        class.iter().enumerate().all(|(i, &e1)| {
            class[i + 1..]
                .iter()
                .all(|&e2| theta(d, edges[e1], edges[e2]))
        })
    })
}
