//! Simple connected undirected graphs on dense vertex indices, BFS distances
//! and edge-deletion components.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// An immutable simple connected graph.
///
/// Vertices are `0..n`. Edges keep their input order as edge ids and are
/// stored with the smaller endpoint first. Adjacency is kept in CSR form,
/// each vertex's slice sorted by neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    // (neighbor, edge id)
    adj: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a validated graph. Rejects self-loops, duplicate edges,
    /// out-of-range endpoints and disconnected inputs.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            edges.push((u.min(v), u.max(v)));
        }

        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![(0, 0); 2 * edges.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[fill[u]] = (v, id);
            fill[u] += 1;
            adj[fill[v]] = (u, id);
            fill[v] += 1;
        }
        for u in 0..n {
            let slice = &mut adj[offsets[u]..offsets[u + 1]];
            slice.sort_unstable();
            if let Some(w) = slice.windows(2).find(|w| w[0].0 == w[1].0) {
                let v = w[0].0;
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }

        let graph = Graph {
            n,
            edges,
            offsets,
            adj,
        };
        let components = graph.components_after_deletion(&[])?.count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(graph)
    }

    /// The one-vertex graph.
    pub fn singleton() -> Graph {
        Graph {
            n: 1,
            edges: Vec::new(),
            offsets: vec![0, 0],
            adj: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<(usize, usize)> {
        self.edges.get(id).copied().ok_or(Error::UnknownEdgeId(id))
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn incident(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident(u).iter().map(|&(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let inc = self.incident(u);
        inc.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| inc[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
        true
    }

    /// Hop distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        self.bfs_into(source, &mut dist);
        dist
    }

    fn bfs_into(&self, source: usize, dist: &mut [u32]) {
        dist.fill(u32::MAX);
        dist[source] = 0;
        let mut queue = VecDeque::with_capacity(self.n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for v in self.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
    }

    /// Components of the graph with the edges `deleted` removed. Components
    /// are numbered in ascending order of their smallest vertex.
    pub fn components_after_deletion(&self, deleted: &[usize]) -> Result<Components> {
        let mut mask = vec![false; self.edges.len()];
        for &e in deleted {
            if e >= self.edges.len() {
                return Err(Error::UnknownEdgeId(e));
            }
            mask[e] = true;
        }
        Ok(self.components_masked(&mask))
    }

    pub(crate) fn components_masked(&self, deleted: &[bool]) -> Components {
        let mut component_of = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if component_of[start] != usize::MAX {
                continue;
            }
            component_of[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &(v, e) in self.incident(u) {
                    if !deleted[e] && component_of[v] == usize::MAX {
                        component_of[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        Components::from_labels(component_of, count)
    }

    /// The graph with the vertices flagged in `removed` deleted. Returns the
    /// new graph and, for each old vertex, its new index.
    pub fn remove_vertices(&self, removed: &[bool]) -> Result<(Graph, Vec<Option<usize>>)> {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (u, slot) in map.iter_mut().enumerate() {
            if !removed[u] {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)));
        let graph = Graph::new(next, edges)?;
        Ok((graph, map))
    }
}

/// Per-vertex degrees; sums to twice the edge count.
pub fn degree_vector(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).map(|u| g.degree(u)).collect()
}

/// Connected components of a graph after deleting an edge subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    component_of: Vec<usize>,
    offsets: Vec<usize>,
    members: Vec<usize>,
}

impl Components {
    /// Buckets vertices by label; scanning in vertex order keeps every member
    /// list sorted.
    fn from_labels(component_of: Vec<usize>, count: usize) -> Components {
        let mut offsets = vec![0usize; count + 1];
        for &c in &component_of {
            offsets[c + 1] += 1;
        }
        for c in 0..count {
            offsets[c + 1] += offsets[c];
        }
        let mut fill = offsets[..count].to_vec();
        let mut members = vec![0; component_of.len()];
        for (u, &c) in component_of.iter().enumerate() {
            members[fill[c]] = u;
            fill[c] += 1;
        }
        Components {
            component_of,
            offsets,
            members,
        }
    }

    pub fn count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn component_of(&self, u: usize) -> usize {
        self.component_of[u]
    }

    pub fn labels(&self) -> &[usize] {
        &self.component_of
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[self.offsets[c]..self.offsets[c + 1]]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        (0..self.count()).map(|c| self.members(c))
    }

    /// Sums a per-vertex quantity over each component.
    pub fn aggregate<T, F>(&self, mut f: F) -> Vec<T>
    where
        T: std::iter::Sum<T>,
        F: FnMut(usize) -> T,
    {
        self.iter().map(|m| m.iter().map(|&x| f(x)).sum()).collect()
    }
}

/// All-pairs hop distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn max(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Exact BFS distances between all vertex pairs. Rows are filled in
/// parallel; each row depends only on its source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![0u32; n * n];
    d.par_chunks_mut(n)
        .enumerate()
        .for_each(|(source, row)| g.bfs_into(source, row));
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn smallest_graphs() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(degree_vector(&p3), vec![1, 2, 1]);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(degree_vector(&c4), vec![2; 4]);
        assert_eq!(c4.edges()[3], (0, 3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop { vertex: 1 }));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 2), (2, 1)]),
            Err(Error::DuplicateEdge { u: 1, v: 2 })
        );
        assert_eq!(
            Graph::new(4, [(0, 1), (2, 3)]),
            Err(Error::Disconnected { components: 2 })
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
        assert!(Graph::new(1, []).is_ok());
    }

    #[test]
    fn distances_on_small_cycles() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(all_pairs_distances(&p3).get(0, 2), 2);
        let c4 = cycle(4);
        let d = all_pairs_distances(&c4);
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(1, 3), 2);
        assert_eq!(all_pairs_distances(&cycle(5)).max(), 2);
    }

    #[test]
    fn deletion_components() {
        let c4 = cycle(4);
        // edges 0-1 and 2-3
        let comps = c4.components_after_deletion(&[0, 2]).unwrap();
        assert_eq!(comps.count(), 2);
        assert_eq!(comps.members(0), &[0, 3]);
        assert_eq!(comps.members(1), &[1, 2]);
        assert_eq!(c4.components_after_deletion(&[]).unwrap().count(), 1);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.components_after_deletion(&[0, 1]).unwrap().count(), 3);
        assert_eq!(
            p3.components_after_deletion(&[5]),
            Err(Error::UnknownEdgeId(5))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_vector(&cycle(6)), vec![2; 6]);
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(degree_vector(&k4), vec![3; 4]);
        assert!(k4.is_complete());
        assert!(!k4.is_bipartite());
        assert!(cycle(6).is_bipartite());
    }

    #[test]
    fn edge_lookup() {
        let c4 = cycle(4);
        assert_eq!(c4.edge_id(3, 0), Some(3));
        assert_eq!(c4.edge_id(0, 2), None);
        assert_eq!(c4.edge_id(9, 0), None);
    }
}
