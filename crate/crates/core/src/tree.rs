//! Linear-time weighted Wiener indices of trees.
//!
//! Every tree edge is its own Θ-class, so `W(T,a,b)` is the sum over edges of
//! `A₁B₂ + A₂B₁` where the two sides of the edge carry weight sums `A₁,B₁`
//! and `A₂,B₂`. One pass in BFS order gives the subtree sums.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::check_weights;
use crate::weight::Weight;

/// Subtree-sum traversal over a tree on `0..n` given as an edge list, with
/// compact ids so large trees stay cache-resident. Repeated copies of an
/// edge are allowed; the traversal keeps the first. Buffers are reused
/// between runs.
#[derive(Default)]
pub(crate) struct TreeSums {
    offsets: Vec<u32>,
    cursor: Vec<u32>,
    adj: Vec<u32>,
    order: Vec<u32>,
    parent: Vec<u32>,
}

impl TreeSums {
    /// `(W(T,a,b), W(T,a))` for the tree spanned by `edges` on
    /// `0..a.len()`.
    pub(crate) fn run<T, I>(&mut self, mut a: Vec<T>, mut b: Vec<T>, edges: I) -> (T, T)
    where
        T: Weight,
        I: Iterator<Item = (usize, usize)> + Clone,
    {
        const NONE: u32 = u32::MAX;
        let n = a.len();
        self.offsets.clear();
        self.offsets.resize(n + 1, 0);
        for (u, v) in edges.clone() {
            self.offsets[u + 1] += 1;
            self.offsets[v + 1] += 1;
        }
        for c in 0..n {
            self.offsets[c + 1] += self.offsets[c];
        }
        self.adj.clear();
        self.adj.resize(self.offsets[n] as usize, 0);
        self.cursor.clear();
        self.cursor.extend_from_slice(&self.offsets[..n]);
        for (u, v) in edges {
            self.adj[self.cursor[u] as usize] = v as u32;
            self.cursor[u] += 1;
            self.adj[self.cursor[v] as usize] = u as u32;
            self.cursor[v] += 1;
        }

        self.parent.clear();
        self.parent.resize(n, NONE);
        self.parent[0] = 0;
        self.order.clear();
        self.order.push(0);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head] as usize;
            head += 1;
            for &v in &self.adj[self.offsets[u] as usize..self.offsets[u + 1] as usize] {
                if self.parent[v as usize] == NONE {
                    self.parent[v as usize] = u as u32;
                    self.order.push(v);
                }
            }
        }
        debug_assert_eq!(self.order.len(), n, "edges span the tree");

        let total_a: T = a.iter().copied().sum();
        let total_b: T = b.iter().copied().sum();
        let (mut double, mut single) = (T::zero(), T::zero());
        for &v in self.order[1..].iter().rev() {
            let (v, p) = (v as usize, self.parent[v as usize] as usize);
            let (sa, sb) = (a[v], b[v]);
            double += sa * (total_b - sb) + (total_a - sa) * sb;
            single += sa * (total_a - sa);
            a[p] += sa;
            b[p] += sb;
        }
        (double, single)
    }
}

/// `W(T,a,b)` in `O(n)`.
pub fn tree_wiener_double_linear<T: Weight>(t: &Graph, a: &[T], b: &[T]) -> Result<T> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    check_weights(t, a)?;
    check_weights(t, b)?;
    let edges = t.edges().iter().copied();
    Ok(TreeSums::default().run(a.to_vec(), b.to_vec(), edges).0)
}

/// `W(T,w)` in `O(n)`.
pub fn tree_wiener_weighted_linear<T: Weight>(t: &Graph, w: &[T]) -> Result<T> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    check_weights(t, w)?;
    let edges = t.edges().iter().copied();
    Ok(TreeSums::default().run(w.to_vec(), w.to_vec(), edges).1)
}
