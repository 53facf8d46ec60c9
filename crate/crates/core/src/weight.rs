//! Exact scalar types used for vertex weights and index accumulators.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational weight.
pub type Rational = Ratio<i128>;

/// An exact, totally ordered ring element. Implemented for `i128` and
/// [`Rational`]; every index in this crate is an exact sum, so no floating
/// point type qualifies.
pub trait Weight:
    Copy
    + Debug
    + Display
    + Ord
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + Sum
    + Send
    + Sync
{
    fn from_count(n: u64) -> Self;
}

impl Weight for i128 {
    fn from_count(n: u64) -> Self {
        n as i128
    }
}

impl Weight for Rational {
    fn from_count(n: u64) -> Self {
        Ratio::from_integer(n as i128)
    }
}

pub fn ones<T: Weight>(n: usize) -> Vec<T> {
    vec![T::one(); n]
}
