#![allow(clippy::needless_range_loop)]

mod common;

use common::{brute_theta_star, connected_graph, distances};
use degdist::families::{gen_basic, BasicFamily};
use degdist::theta::{is_partial_cube, quotient, theta_related, theta_star_classes};
use degdist::{all_pairs_distances, Graph};
use proptest::prelude::*;

fn same_partition(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distance_matrix_axioms(g in connected_graph(60)) {
        let d = all_pairs_distances(&g);
        let fw = distances(&g);
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.get(u, v) as u64, fw[u][v]);
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                if u != v {
                    prop_assert!(d.get(u, v) > 0);
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn degree_sum_and_trivial_deletion(g in connected_graph(60)) {
        let total: usize = (0..g.vertex_count()).map(|u| g.degree(u)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        prop_assert_eq!(g.components_after_deletion(&[]).unwrap().count(), 1);
    }

    #[test]
    fn theta_reflexive_and_symmetric(g in connected_graph(40)) {
        let d = all_pairs_distances(&g);
        let m = g.edge_count();
        for e in 0..m {
            prop_assert!(theta_related(&g, &d, e, e).unwrap());
            for f in e + 1..m {
                prop_assert_eq!(
                    theta_related(&g, &d, e, f).unwrap(),
                    theta_related(&g, &d, f, e).unwrap()
                );
            }
        }
    }

    #[test]
    fn theta_star_matches_brute_closure(g in connected_graph(16)) {
        let classes = theta_star_classes(&g);
        let labels: Vec<usize> = (0..g.edge_count()).map(|e| classes.class_of(e)).collect();
        prop_assert!(same_partition(&labels, &brute_theta_star(&g)));
    }

    #[test]
    fn quotients_are_connected(g in connected_graph(30), picks in proptest::collection::vec(any::<bool>(), 0..200)) {
        let f: Vec<usize> = (0..g.edge_count()).filter(|&e| picks.get(e).copied().unwrap_or(false)).collect();
        let q = quotient(&g, &f).unwrap();
        let reach = q.graph().bfs(0);
        prop_assert!(reach.iter().all(|&x| x != u32::MAX));
    }

    #[test]
    fn partial_cube_classes_split_in_two(g in connected_graph(24)) {
        if is_partial_cube(&g) {
            for class in theta_star_classes(&g).iter() {
                prop_assert_eq!(g.components_after_deletion(class).unwrap().count(), 2);
            }
        }
    }

    #[test]
    fn trees_have_singleton_classes(n in 2usize..40, parents in proptest::collection::vec(0usize..1000, 39)) {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1] % v, v)).collect();
        let t = Graph::new(n, edges).unwrap();
        let classes = theta_star_classes(&t);
        prop_assert_eq!(classes.len(), t.edge_count());
        for class in classes.iter() {
            prop_assert_eq!(class.len(), 1);
            let q = quotient(&t, class).unwrap();
            prop_assert_eq!(q.graph().vertex_count(), 2);
            prop_assert_eq!(q.graph().edge_count(), 1);
        }
    }
}

#[test]
fn partial_cube_examples() {
    for (kind, n, expected) in [
        (BasicFamily::Cycle, 6, true),
        (BasicFamily::Cycle, 8, true),
        (BasicFamily::Cycle, 5, false),
        (BasicFamily::Hypercube, 4, true),
        (BasicFamily::Complete, 3, false),
        (BasicFamily::Star, 7, true),
    ] {
        assert_eq!(
            is_partial_cube(&gen_basic(kind, n).unwrap()),
            expected,
            "{kind:?} {n}"
        );
    }
}
