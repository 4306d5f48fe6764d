//! Exact character algebra for the circle group.
//!
//! [`LaurentPoly`] and [`RationalChar`] live in the variable `q = λ^{1/2}`
//! (exponents doubled); [`VirtualCharacter`] is indexed by honest weights.

mod character;
mod laurent;
mod rational;

pub use character::{char_sum, to_character, VirtualCharacter};
pub use laurent::{exact_divide, laurent_arith, ArithOp, LaurentPoly};
pub use rational::{rational_combine, RationalChar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("quotient is not a Laurent polynomial (data is not the fixed-point data of a closed manifold)")]
    NotDivisible,
    #[error("nonzero coefficient at odd exponent q^{exponent}: half-weight leaked into the character")]
    OddExponent { exponent: i64 },
    #[error("multiplicity at q^{exponent} does not fit in 64 bits")]
    Overflow { exponent: i64 },
    #[error("zero denominator")]
    ZeroDenominator,
}
