//! Partial Hamming graphs and the lower bound on `W(G,w)` coming from the
//! canonical embedding.
//!
//! Each Θ*-class `F_i` gives a quotient `G/F_i`; labelling every vertex by its
//! quotient component in each class is the canonical embedding. `G` is a
//! partial Hamming graph exactly when every quotient is complete, and then
//! `W(G,w) = Σ_i Σ_{j<k} w(C_j) w(C_k)` over the components of each class.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};
use crate::indices::{check_weights, degrees_as};
use crate::theta::{quotient_masked, theta_star_classes_with, QuotientGraph, ThetaClasses};
use crate::weight::Weight;

/// The Θ*-classes of a graph together with their quotients.
#[derive(Clone, Debug)]
pub struct HammingStructure {
    classes: ThetaClasses,
    quotients: Vec<QuotientGraph>,
}

impl HammingStructure {
    pub fn new(g: &Graph) -> Self {
        let d = all_pairs_distances(g);
        let classes = theta_star_classes_with(g, &d);
        let mut mask = vec![false; g.edge_count()];
        let quotients = classes
            .iter()
            .map(|class| {
                class.iter().for_each(|&e| mask[e] = true);
                let q = quotient_masked(g, &mask);
                class.iter().for_each(|&e| mask[e] = false);
                q
            })
            .collect();
        HammingStructure { classes, quotients }
    }

    pub fn classes(&self) -> &ThetaClasses {
        &self.classes
    }

    pub fn quotients(&self) -> &[QuotientGraph] {
        &self.quotients
    }

    /// Number of components left by deleting each class.
    pub fn factor_sizes(&self) -> Vec<usize> {
        self.quotients
            .iter()
            .map(|q| q.graph().vertex_count())
            .collect()
    }

    /// Every quotient is a complete graph.
    pub fn is_partial_hamming(&self) -> bool {
        self.quotients.iter().all(|q| q.graph().is_complete())
    }

    /// Per class, `Σ_{j<k} w(C_j) w(C_k)`.
    pub fn bound_terms<T: Weight>(&self, w: &[T]) -> Result<Vec<T>> {
        if let Some(q) = self.quotients.first() {
            if q.components().labels().len() != w.len() {
                return Err(Error::WeightLength {
                    expected: q.components().labels().len(),
                    found: w.len(),
                });
            }
        }
        Ok(self
            .quotients
            .iter()
            .map(|q| {
                let sums = q.components().aggregate(|x| w[x]);
                let total: T = sums.iter().copied().sum();
                // Σ_{j<k} s_j s_k, accumulated as s_j times the sum of the rest.
                let mut rest = total;
                let mut acc = T::zero();
                for &s in &sums {
                    rest = rest - s;
                    acc += s * rest;
                }
                acc
            })
            .collect())
    }

    pub fn embedding(&self) -> CanonicalEmbedding {
        let n = self
            .quotients
            .first()
            .map_or(1, |q| q.components().labels().len());
        let coordinates = (0..n)
            .map(|u| self.quotients.iter().map(|q| q.ell(u)).collect())
            .collect();
        CanonicalEmbedding {
            coordinates,
            factor_sizes: self.factor_sizes(),
        }
    }
}

/// `u ↦ (ℓ_1(u), …, ℓ_k(u))` into the product of the quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalEmbedding {
    coordinates: Vec<Vec<usize>>,
    factor_sizes: Vec<usize>,
}

impl CanonicalEmbedding {
    pub fn dimension(&self) -> usize {
        self.factor_sizes.len()
    }

    pub fn factor_sizes(&self) -> &[usize] {
        &self.factor_sizes
    }

    pub fn coordinates(&self, u: usize) -> &[usize] {
        &self.coordinates[u]
    }

    /// Number of coordinates where `u` and `v` differ.
    pub fn hamming_distance(&self, u: usize, v: usize) -> usize {
        self.coordinates[u]
            .iter()
            .zip(&self.coordinates[v])
            .filter(|(x, y)| x != y)
            .count()
    }
}

pub fn canonical_embedding(g: &Graph) -> CanonicalEmbedding {
    HammingStructure::new(g).embedding()
}

pub fn is_partial_hamming(g: &Graph) -> bool {
    HammingStructure::new(g).is_partial_hamming()
}

/// `Σ_i Σ_{j<k} w(C_j) w(C_k) ≤ W(G,w)`, with equality iff `G` is partial Hamming.
pub fn weighted_wiener_lower_bound<T: Weight>(g: &Graph, w: &[T]) -> Result<T> {
    check_weights(g, w)?;
    Ok(HammingStructure::new(g).bound_terms(w)?.into_iter().sum())
}

/// The bound above with `w = deg`.
pub fn gutman_lower_bound(g: &Graph) -> i128 {
    let deg = degrees_as::<i128>(g);
    weighted_wiener_lower_bound(g, &deg).expect("degree vector has length n")
}

/// `W(G,w)` from the closed sum, for partial Hamming graphs only.
pub fn wiener_weighted_hamming<T: Weight>(g: &Graph, w: &[T]) -> Result<T> {
    check_weights(g, w)?;
    let hs = HammingStructure::new(g);
    if !hs.is_partial_hamming() {
        return Err(Error::NotPartialHamming);
    }
    Ok(hs.bound_terms(w)?.into_iter().sum())
}

/// `Gut(G)` from the closed sum, for partial Hamming graphs only.
pub fn gutman_exact_hamming(g: &Graph) -> Result<i128> {
    wiener_weighted_hamming(g, &degrees_as::<i128>(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_basic, gen_house, BasicFamily};
    use crate::indices::{gutman, wiener, wiener_weighted};

    fn basic(kind: BasicFamily, n: usize) -> Graph {
        gen_basic(kind, n).unwrap()
    }

    #[test]
    fn even_cycle_is_partial_hamming() {
        let c6 = basic(BasicFamily::Cycle, 6);
        assert!(is_partial_hamming(&c6));
        assert_eq!(weighted_wiener_lower_bound(&c6, &[1i128; 6]).unwrap(), 27);
        assert_eq!(wiener(&c6), 27);
    }

    #[test]
    fn odd_cycle_bound_is_strict() {
        let c5 = basic(BasicFamily::Cycle, 5);
        assert!(!is_partial_hamming(&c5));
        assert_eq!(weighted_wiener_lower_bound(&c5, &[1i128; 5]).unwrap(), 10);
        assert_eq!(wiener(&c5), 15);
        assert_eq!(gutman_lower_bound(&c5), 40);
        assert_eq!(gutman(&c5), 60);
        assert_eq!(gutman_exact_hamming(&c5), Err(Error::NotPartialHamming));

        let emb = canonical_embedding(&c5);
        assert_eq!(emb.dimension(), 1);
        assert_eq!(emb.factor_sizes(), &[5]);
        let mut coords: Vec<usize> = (0..5).map(|u| emb.coordinates(u)[0]).collect();
        coords.sort_unstable();
        assert_eq!(coords, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn exact_on_hamming_examples() {
        let c4 = basic(BasicFamily::Cycle, 4);
        assert_eq!(gutman_exact_hamming(&c4).unwrap(), 32);
        for n in 2..7 {
            let kn = basic(BasicFamily::Complete, n);
            assert!(is_partial_hamming(&kn));
            assert_eq!(gutman_exact_hamming(&kn).unwrap(), gutman(&kn));
        }
        let q3 = basic(BasicFamily::Hypercube, 3);
        assert_eq!(gutman_exact_hamming(&q3).unwrap(), gutman(&q3));
        let tree = basic(BasicFamily::Star, 6);
        let w = [3i128, 1, 4, 1, 5, 9];
        assert_eq!(
            wiener_weighted_hamming(&tree, &w).unwrap(),
            wiener_weighted(&tree, &w).unwrap()
        );
    }

    #[test]
    fn house_graphs() {
        for n in 2..9 {
            let h = gen_house(n).unwrap();
            assert!(is_partial_hamming(&h));
            let n = n as i128;
            assert_eq!(gutman_lower_bound(&h), 6 * n.pow(3) + 9 * n * n - 4 * n + 1);
        }
    }

    #[test]
    fn embedding_is_isometric_on_hamming_graphs() {
        let q3 = basic(BasicFamily::Hypercube, 3);
        let emb = canonical_embedding(&q3);
        let d = all_pairs_distances(&q3);
        for u in 0..8 {
            for v in 0..8 {
                assert_eq!(emb.hamming_distance(u, v), d.get(u, v) as usize);
            }
        }
    }

    #[test]
    fn weight_length_checked() {
        let c4 = basic(BasicFamily::Cycle, 4);
        assert!(matches!(
            weighted_wiener_lower_bound(&c4, &[1i128; 3]),
            Err(Error::WeightLength { .. })
        ));
    }
}
