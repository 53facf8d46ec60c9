#![allow(dead_code, clippy::needless_range_loop)]
//! Brute-force reference computations written independently of the library:
//! Floyd-Warshall distances and direct pair sums over plain edge lists.

use degdist::Graph;
use proptest::prelude::*;

pub const INF: u64 = u64::MAX / 4;

pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn distances(g: &Graph) -> Vec<Vec<u64>> {
    floyd_warshall(g.vertex_count(), g.edges())
}

pub fn degrees(g: &Graph) -> Vec<i128> {
    let mut deg = vec![0i128; g.vertex_count()];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// `Σ_{u<v} (a(u)b(v) + a(v)b(u)) d(u,v)`.
pub fn brute_double(g: &Graph, a: &[i128], b: &[i128]) -> i128 {
    let d = distances(g);
    let n = g.vertex_count();
    let mut s = 0;
    for u in 0..n {
        for v in u + 1..n {
            s += (a[u] * b[v] + a[v] * b[u]) * d[u][v] as i128;
        }
    }
    s
}

/// `Σ_{u<v} w(u)w(v) d(u,v)`.
pub fn brute_weighted(g: &Graph, w: &[i128]) -> i128 {
    let d = distances(g);
    let n = g.vertex_count();
    let mut s = 0;
    for u in 0..n {
        for v in u + 1..n {
            s += w[u] * w[v] * d[u][v] as i128;
        }
    }
    s
}

pub fn brute_dd(g: &Graph) -> i128 {
    brute_double(g, &degrees(g), &vec![1; g.vertex_count()])
}

pub fn brute_gut(g: &Graph) -> i128 {
    brute_weighted(g, &degrees(g))
}

/// Θ from its definition, closed transitively with a boolean Warshall pass.
/// Returns a class label per edge, labels numbered by first edge.
pub fn brute_theta_star(g: &Graph) -> Vec<usize> {
    let d = distances(g);
    let e = g.edges();
    let m = e.len();
    let mut r = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            let ((x, y), (u, v)) = (e[i], e[j]);
            r[i][j] = d[x][u] + d[y][v] != d[x][v] + d[y][u];
        }
    }
    for k in 0..m {
        for i in 0..m {
            if r[i][k] {
                for j in 0..m {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    let mut label = vec![usize::MAX; m];
    let mut next = 0;
    for i in 0..m {
        if label[i] == usize::MAX {
            for j in 0..m {
                if r[i][j] {
                    label[j] = next;
                }
            }
            next += 1;
        }
    }
    label
}

/// A connected graph on `n` vertices from a parent list and extra pairs.
pub fn assemble(n: usize, parents: &[usize], extra: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut add = |u: usize, v: usize, edges: &mut Vec<(usize, usize)>| {
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        }
    };
    for v in 1..n {
        add(parents[v - 1] % v, v, &mut edges);
    }
    for &(u, v) in extra {
        add(u % n, v % n, &mut edges);
    }
    Graph::new(n, edges).expect("connected by construction")
}

/// Connected graphs on `2..=max_n` vertices with density from trees to dense.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(0..n, n - 1),
            proptest::collection::vec((0..n, 0..n), 0..=2 * n),
        )
            .prop_map(|(n, parents, extra)| assemble(n, &parents, &extra))
    })
}

/// A graph with weights `1..=9`.
pub fn weighted_graph(max_n: usize) -> impl Strategy<Value = (Graph, Vec<i128>, Vec<i128>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (
            Just(g),
            proptest::collection::vec(1i128..=9, n),
            proptest::collection::vec(1i128..=9, n),
        )
    })
}
