//! Exact rational polynomials and matrices: characteristic polynomials,
//! square-free decomposition and Sturm root counting.

mod matrix;
mod polynomial;
mod squarefree;
mod sturm;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use matrix::RationalMatrix;
pub use polynomial::Polynomial;
pub use squarefree::{squarefree_decomposition, squarefree_part, SquarefreeDecomposition, SquarefreeFactor};
pub use sturm::{multiplicity_at, sturm_count, SturmSequence};

/// Arbitrary-precision rational; always normalized with a positive denominator.
pub type Rational = BigRational;

/// `num / den` as a [`Rational`].
///
/// # Panics
/// If `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
}
