mod common;

use common::{
    brute_dd, brute_double, brute_gut, brute_weighted, connected_graph, degrees, weighted_graph,
};
use degdist::cut::{
    degree_distance_via_cuts, gutman_via_cuts, wiener_double_via_cuts, wiener_weighted_via_cuts,
    CutDecomposition,
};
use degdist::families::{
    gen_basic, gen_house, random_connected, BasicFamily, FamilyName, FamilySpec, Generated,
};
use degdist::hamming::{
    canonical_embedding, gutman_exact_hamming, is_partial_hamming, weighted_wiener_lower_bound,
    HammingStructure,
};
use degdist::verify::random_coarsening;
use degdist::{
    all_pairs_distances, degree_distance, gutman, theta_star_classes, validate_coarser, wiener,
    wiener_double, wiener_plus, wiener_weighted, DoubleWeightedGraph, EdgePartition, Error, Graph,
    Rational,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partitions(g: &Graph, seed: u64) -> Vec<EdgePartition> {
    let finest = EdgePartition::finest(&theta_star_classes(g));
    let coarsest = finest.merge(&vec![0; finest.len()]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![finest.clone(), coarsest];
    out.extend((0..3).map(|_| random_coarsening(&finest, &mut rng)));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn indices_match_brute_force((g, a, b) in weighted_graph(30)) {
        let deg = degrees(&g);
        let n = g.vertex_count();
        prop_assert_eq!(wiener(&g), brute_weighted(&g, &vec![1; n]));
        prop_assert_eq!(degree_distance(&g), brute_dd(&g));
        prop_assert_eq!(gutman(&g), brute_gut(&g));
        prop_assert_eq!(degree_distance(&g), wiener_plus(&g, &deg).unwrap());
        prop_assert_eq!(gutman(&g), wiener_weighted(&g, &deg).unwrap());
        let dwg = DoubleWeightedGraph::new(g.clone(), a.clone(), b.clone()).unwrap();
        prop_assert_eq!(wiener_double(&dwg), brute_double(&g, &a, &b));
        prop_assert_eq!(wiener_weighted(&g, &a).unwrap(), brute_weighted(&g, &a));
    }

    #[test]
    fn double_index_symmetric_and_bilinear((g, a, b) in weighted_graph(24), k in 1i128..7) {
        let ab = wiener_double(&DoubleWeightedGraph::new(g.clone(), a.clone(), b.clone()).unwrap());
        let ba = wiener_double(&DoubleWeightedGraph::new(g.clone(), b.clone(), a.clone()).unwrap());
        prop_assert_eq!(ab, ba);
        let ka: Vec<i128> = a.iter().map(|x| k * x).collect();
        let kab = wiener_double(&DoubleWeightedGraph::new(g.clone(), ka, b.clone()).unwrap());
        prop_assert_eq!(kab, k * ab);
        // rationals agree with integers
        let ra: Vec<Rational> = a.iter().map(|&x| Rational::from_integer(x)).collect();
        let rb: Vec<Rational> = b.iter().map(|&x| Rational::from_integer(x)).collect();
        let r = wiener_double(&DoubleWeightedGraph::new(g, ra, rb).unwrap());
        prop_assert_eq!(r, Rational::from_integer(ab));
    }

    #[test]
    fn cuts_agree_on_every_coarser_partition((g, a, b) in weighted_graph(30), seed in any::<u64>()) {
        let dd = brute_dd(&g);
        let gut = brute_gut(&g);
        let wd = brute_double(&g, &a, &b);
        let ws = brute_weighted(&g, &a);
        let dwg = DoubleWeightedGraph::new(g.clone(), a.clone(), b).unwrap();
        for p in partitions(&g, seed) {
            prop_assert_eq!(degree_distance_via_cuts(&g, &p).unwrap(), dd);
            prop_assert_eq!(gutman_via_cuts(&g, &p).unwrap(), gut);
            prop_assert_eq!(wiener_double_via_cuts(&dwg, &p).unwrap(), wd);
            prop_assert_eq!(wiener_weighted_via_cuts(&g, &a, &p).unwrap(), ws);
        }
    }

    #[test]
    fn distances_decompose_over_quotients(g in connected_graph(40), seed in any::<u64>()) {
        let d = all_pairs_distances(&g);
        let n = g.vertex_count();
        for p in partitions(&g, seed) {
            let cuts = CutDecomposition::new(&g, &p).unwrap();
            for u in 0..n {
                for v in 0..n {
                    prop_assert_eq!(cuts.distance(u, v), d.get(u, v));
                }
            }
        }
    }

    #[test]
    fn merged_classes_validate(g in connected_graph(24), seed in any::<u64>()) {
        for p in partitions(&g, seed) {
            prop_assert!(validate_coarser(&g, p.blocks().to_vec()).is_ok());
        }
    }

    #[test]
    fn bound_is_tight_exactly_on_partial_hamming((g, w, _) in weighted_graph(40)) {
        let bound = weighted_wiener_lower_bound(&g, &w).unwrap();
        let exact = brute_weighted(&g, &w);
        prop_assert!(bound <= exact);
        prop_assert_eq!(bound == exact, is_partial_hamming(&g));
    }

    #[test]
    fn canonical_embedding_is_isometric(g in connected_graph(40)) {
        let d = all_pairs_distances(&g);
        let emb = canonical_embedding(&g);
        let classes = theta_star_classes(&g);
        let cuts = CutDecomposition::new(&g, &EdgePartition::finest(&classes)).unwrap();
        let n = g.vertex_count();
        let hamming = is_partial_hamming(&g);
        for (i, block) in cuts.blocks().iter().enumerate() {
            prop_assert!(emb.factor_sizes()[i] >= 2);
            for u in 0..n {
                prop_assert_eq!(emb.coordinates(u)[i], block.quotient().ell(u));
            }
        }
        for u in 0..n {
            for v in 0..n {
                let through: u32 = cuts
                    .blocks()
                    .iter()
                    .enumerate()
                    .map(|(i, b)| b.distances().get(emb.coordinates(u)[i], emb.coordinates(v)[i]))
                    .sum();
                prop_assert_eq!(through, d.get(u, v));
                if hamming {
                    prop_assert_eq!(emb.hamming_distance(u, v), d.get(u, v) as usize);
                }
            }
        }
    }
}

#[test]
fn worked_index_values() {
    let p3 = gen_basic(BasicFamily::Path, 3).unwrap();
    assert_eq!((wiener(&p3), degree_distance(&p3), gutman(&p3)), (4, 10, 6));
    let c4 = gen_basic(BasicFamily::Cycle, 4).unwrap();
    assert_eq!(gutman(&c4), 32);
    let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
    assert_eq!(wiener(&c5), 15);
    assert_eq!(degree_distance(&c5), 4 * wiener(&c5));
    let h2 = gen_house(2).unwrap();
    assert_eq!(gutman(&h2), 77);
    assert_eq!(gutman(&gen_house(3).unwrap()), 232);
}

#[test]
fn house_merged_class_degree_sums() {
    for n in 2..=12usize {
        let h = gen_house(n).unwrap();
        let hs = HammingStructure::new(&h);
        assert_eq!(hs.classes().len(), n);
        let merged: Vec<_> = hs
            .quotients()
            .iter()
            .filter(|q| q.graph().vertex_count() == 3)
            .collect();
        assert_eq!(merged.len(), 1);
        let mut sums = merged[0].components().aggregate(|x| h.degree(x));
        sums.sort_unstable();
        assert_eq!(sums, vec![2, 3 * n - 1, 3 * n - 1]);
        let n = n as i128;
        assert_eq!(
            gutman_exact_hamming(&h).unwrap(),
            6 * n.pow(3) + 9 * n * n - 4 * n + 1
        );
    }
}

#[test]
fn hamming_witnesses() {
    let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
    assert_eq!(weighted_wiener_lower_bound(&c5, &[1i128; 5]).unwrap(), 10);
    assert_eq!(gutman_exact_hamming(&c5), Err(Error::NotPartialHamming));
    for g in [
        gen_basic(BasicFamily::Cycle, 6).unwrap(),
        gen_basic(BasicFamily::Hypercube, 3).unwrap(),
        gen_house(6).unwrap(),
    ] {
        assert!(is_partial_hamming(&g));
        assert_eq!(gutman_exact_hamming(&g).unwrap(), brute_gut(&g));
    }
    let k2 = gen_basic(BasicFamily::Path, 2).unwrap();
    assert_eq!(canonical_embedding(&k2).factor_sizes(), &[2]);
    let c6 = gen_basic(BasicFamily::Cycle, 6).unwrap();
    assert_eq!(canonical_embedding(&c6).factor_sizes(), &[2, 2, 2]);
}

#[test]
fn generators_are_deterministic() {
    for seed in 0..20 {
        assert_eq!(random_connected(25, seed), random_connected(25, seed));
    }
    let spec = FamilySpec {
        name: FamilyName::Blowup,
        n: 6,
        m: None,
        seed: 9,
        kinks: Vec::new(),
    };
    let (Generated::Graph(x), Generated::Graph(y)) =
        (spec.generate().unwrap(), spec.generate().unwrap())
    else {
        panic!("blowup yields a graph");
    };
    assert_eq!(x, y);
}
