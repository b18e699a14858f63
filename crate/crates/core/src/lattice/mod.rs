//! Exact arithmetic and weighted-degree monomial enumeration.

mod monomial;
mod rational;
mod weights;

pub use monomial::{enumerate_monomials, has_monomial, weighted_degree, ExponentVector, IndexSubset};
pub use rational::Rational;
pub use weights::WeightVector;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("invalid fraction: zero denominator")]
    ZeroDenominator,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
