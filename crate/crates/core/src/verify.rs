//! Cross-checks every applicable method against the all-pairs reference.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cut::{
    degree_distance_via_cuts, gutman_via_cuts, wiener_weighted_via_cuts, CutDecomposition,
};
use crate::error::Result;
use crate::families::random_connected;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::io::VertexWeights;
use crate::phenylene::dd_gut_of_squeeze;
use crate::report::{evaluate, Input, Method, Subject, Values, WeightedValues};
use crate::theta::{theta_star_classes_with, EdgePartition};
use crate::weight::{ones, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct MethodRow {
    pub method: String,
    pub values: Values,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub rows: Vec<MethodRow>,
    /// Methods that do not apply, with the reason.
    pub skipped: Vec<(String, String)>,
    /// `d(u,v) = Σ_i d_{G/F_i}(ℓ_i(u), ℓ_i(v))` for every pair and every
    /// partition tried.
    pub distances_agree: bool,
}

impl Verification {
    pub fn all_agree(&self) -> bool {
        self.distances_agree && self.rows.iter().all(|r| r.agrees)
    }
}

/// Merges Θ*-classes into a random coarser partition.
pub fn random_coarsening(finest: &EdgePartition, rng: &mut impl Rng) -> EdgePartition {
    if finest.is_empty() {
        return finest.clone();
    }
    let k = rng.gen_range(1..=finest.len());
    let group: Vec<usize> = (0..finest.len()).map(|_| rng.gen_range(0..k)).collect();
    finest.merge(&group)
}

pub fn distances_decompose(
    g: &Graph,
    d: &DistanceMatrix,
    partition: &EdgePartition,
) -> Result<bool> {
    let cuts = CutDecomposition::new(g, partition)?;
    let n = g.vertex_count();
    Ok((0..n).all(|u| (0..n).all(|v| cuts.distance(u, v) == d.get(u, v))))
}

fn by_partition(g: &Graph, p: &EdgePartition, weights: Option<&VertexWeights>) -> Result<Values> {
    let unit = ones::<i128>(g.vertex_count());
    let weighted = match weights {
        Some(w) => {
            let cuts = CutDecomposition::new(g, p)?;
            let runit = ones::<Rational>(g.vertex_count());
            let sum = |terms: Vec<Rational>| -> Rational { terms.into_iter().sum() };
            Some(WeightedValues {
                wiener_weighted: wiener_weighted_via_cuts(g, &w.a, p)?.into(),
                wiener_plus: sum(cuts.wiener_double_terms(&w.a, &runit)?).into(),
                wiener_double: sum(cuts.wiener_double_terms(&w.a, &w.b)?).into(),
            })
        }
        None => None,
    };
    Ok(Values {
        wiener: wiener_weighted_via_cuts(g, &unit, p)?.into(),
        degree_distance: degree_distance_via_cuts(g, p)?.into(),
        gutman: gutman_via_cuts(g, p)?.into(),
        weighted,
    })
}

/// Runs every applicable method on `input`, plus `extra_partitions` random
/// coarsenings of the Θ*-partition.
pub fn verify(input: &Input, extra_partitions: usize, seed: u64) -> Result<Verification> {
    let g = input.subject.graph();
    let (reference, _) = evaluate(input, Method::Oracle)?;
    let mut rows = vec![MethodRow {
        method: "oracle".into(),
        values: reference.clone(),
        agrees: true,
    }];
    let mut skipped = Vec::new();
    let mut push = |method: String, values: Values| {
        let agrees = values == reference;
        rows.push(MethodRow {
            method,
            values,
            agrees,
        });
    };

    for method in [Method::Cuts, Method::Reduce, Method::Hamming, Method::Trees] {
        match evaluate(input, method) {
            Ok((values, _)) => push(method.to_string(), values),
            Err(e) if e.kind() == crate::error::ErrorKind::Inapplicable => {
                skipped.push((method.to_string(), e.to_string()))
            }
            Err(e) => return Err(e),
        }
    }

    if let Subject::Phenylene(ph) = &input.subject {
        let (dd, gut) = dd_gut_of_squeeze(ph.squeeze())?;
        let mut values = reference.clone();
        values.degree_distance = dd.into();
        values.gutman = gut.into();
        push("squeeze".into(), values);
    }

    let d = all_pairs_distances(g);
    let finest = EdgePartition::finest(&theta_star_classes_with(g, &d));
    let mut distances_agree = distances_decompose(g, &d, &finest)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra_partitions {
        let p = random_coarsening(&finest, &mut rng);
        distances_agree &= distances_decompose(g, &d, &p)?;
        let values = by_partition(g, &p, input.weights.as_ref())?;
        push(format!("cuts ({} blocks)", p.len()), values);
    }
    Ok(Verification {
        rows,
        skipped,
        distances_agree,
    })
}

#[derive(Clone, Debug)]
pub struct RandomVerification {
    pub checked: usize,
    pub failures: usize,
    /// The failing graph with the fewest vertices, then edges.
    pub smallest_witness: Option<Graph>,
}

/// Verifies `count` seeded random graphs on `2..=max_n` vertices with random
/// weights in `1..=9`.
pub fn verify_random(count: usize, max_n: usize, seed: u64) -> Result<RandomVerification> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut smallest: Option<Graph> = None;
    for _ in 0..count {
        let n = rng.gen_range(2..=max_n.max(2));
        let g = random_connected(n, rng.gen());
        let weights = VertexWeights {
            a: (0..n)
                .map(|_| Rational::from_integer(rng.gen_range(1..=9)))
                .collect(),
            b: (0..n)
                .map(|_| Rational::from_integer(rng.gen_range(1..=9)))
                .collect(),
        };
        let input = Input::graph("random", g.clone()).with_weights(weights)?;
        if !verify(&input, 3, rng.gen())?.all_agree() {
            failures += 1;
            let key = |h: &Graph| (h.vertex_count(), h.edge_count());
            if smallest.as_ref().is_none_or(|s| key(&g) < key(s)) {
                smallest = Some(g);
            }
        }
    }
    Ok(RandomVerification {
        checked: count,
        failures,
        smallest_witness: smallest,
    })
}
