//! Exact degree distance, Gutman index and weighted Wiener indices of
//! connected graphs.
//!
//! Every index is a sum over vertex pairs of a weight product times the
//! distance. Besides the all-pairs reference computation the crate offers
//! three faster routes:
//!
//! * the cut method, which splits `G` along a partition of its edges that is
//!   coarser than the Θ* relation and sums indices of the quotient graphs;
//! * twin reduction, which collapses classes of vertices with equal open or
//!   closed neighbourhoods and tracks a closed-form correction;
//! * the closed-form sum for partial Hamming graphs.
//!
//! Phenylenes get a dedicated linear-time path through four quotient trees.

pub mod cut;
mod dsu;
pub mod error;
pub mod families;
pub mod graph;
pub mod hamming;
pub mod indices;
pub mod io;
pub mod phenylene;
pub mod reduction;
pub mod report;
pub mod theta;
pub mod tree;
pub mod verify;
pub mod weight;

pub use error::{Error, ErrorKind, Result};
pub use graph::{all_pairs_distances, Components, DistanceMatrix, Graph};
pub use indices::{
    degree_distance, gutman, wiener, wiener_double, wiener_plus, wiener_weighted,
    DoubleWeightedGraph, Oracle,
};
pub use theta::{
    is_partial_cube, quotient, theta_related, theta_star_classes, validate_coarser, EdgePartition,
    QuotientGraph, ThetaClasses,
};
pub use weight::{Rational, Weight};
