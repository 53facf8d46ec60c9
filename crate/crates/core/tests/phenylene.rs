mod common;

use common::{brute_dd, brute_gut};
use degdist::families::{gen_phenylene_chain, Kink};
use degdist::phenylene::{
    build_benzenoid, build_phenylene, dd_gut_via_squeeze, dd_gut_via_trees, phe6, quotient_trees,
    tree_breakdown,
};
use degdist::theta::{is_partial_cube, validate_coarser};
use degdist::{degree_distance, gutman, wiener};
use proptest::prelude::*;

fn kink() -> impl Strategy<Value = Kink> {
    prop_oneof![
        Just(Kink::Linear),
        Just(Kink::AngularPlus),
        Just(Kink::AngularMinus)
    ]
}

fn chain(max_h: usize) -> impl Strategy<Value = (usize, Vec<Kink>)> {
    (1..=max_h).prop_flat_map(|h| {
        (
            Just(h),
            proptest::collection::vec(kink(), h.saturating_sub(2)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn three_routes_agree((h, kinks) in chain(8)) {
        let Ok(placement) = gen_phenylene_chain(h, &kinks) else {
            return Ok(());
        };
        let ph = build_phenylene(&placement).unwrap();
        let g = ph.graph();
        prop_assert_eq!(g.vertex_count(), 6 * h);
        prop_assert_eq!(g.edge_count(), 8 * h - 2);
        let oracle = (brute_dd(g), brute_gut(g));
        prop_assert_eq!(dd_gut_via_squeeze(&placement).unwrap(), oracle);
        prop_assert_eq!(dd_gut_via_trees(&ph), oracle);
        let w: i128 = quotient_trees(&ph).iter().map(|t| t.wiener_sizes()).sum();
        prop_assert_eq!(w, wiener(g));
    }

    #[test]
    fn edge_families_are_coarser_and_graphs_are_partial_cubes((h, kinks) in chain(8)) {
        let Ok(placement) = gen_phenylene_chain(h, &kinks) else {
            return Ok(());
        };
        let ph = build_phenylene(&placement).unwrap();
        let g = ph.graph();
        let blocks: Vec<Vec<usize>> = ph
            .edge_classes()
            .iter()
            .map(|mask| (0..g.edge_count()).filter(|&e| mask[e]).collect())
            .filter(|b: &Vec<usize>| !b.is_empty())
            .collect();
        prop_assert!(validate_coarser(g, blocks).is_ok());
        prop_assert!(is_partial_cube(g));
        prop_assert!(is_partial_cube(build_benzenoid(&placement).unwrap().graph()));
        for t in quotient_trees(&ph) {
            prop_assert!(t.tree().is_tree());
        }
    }
}

#[test]
fn phe6_reproduces_published_values() {
    let placement = phe6();
    let ph = build_phenylene(&placement).unwrap();
    let g = ph.graph();
    assert_eq!((g.vertex_count(), g.edge_count()), (36, 46));
    assert_eq!((degree_distance(g), gutman(g)), (18384, 22856));
    assert_eq!(dd_gut_via_squeeze(&placement).unwrap(), (18384, 22856));
    assert_eq!(dd_gut_via_trees(&ph), (18384, 22856));
    let tb = tree_breakdown(&ph);
    let mut dd = tb.degree_distance;
    let mut gut = tb.gutman;
    assert_eq!((dd[3], gut[3]), (5784, 7252));
    dd[..3].sort_unstable();
    gut[..3].sort_unstable();
    assert_eq!(dd, [2976, 4416, 5208, 5784]);
    assert_eq!(gut, [3600, 5520, 6484, 7252]);
}

#[test]
fn linear_chain_dual_is_a_path() {
    let placement = gen_phenylene_chain(6, &[Kink::Linear; 4]).unwrap();
    let dual = build_benzenoid(&placement).unwrap();
    let dual = dual.inner_dual();
    let mut degrees: Vec<usize> = (0..6).map(|i| dual.degree(i)).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 2, 2, 2, 2]);
}
