//! Arbitrary-precision exact linear algebra.
//!
//! Scalars are `num`'s [`BigInt`] and [`BigRat`] (always in lowest terms
//! with positive denominator). On top of them this module provides monic
//! integer polynomials ([`IntPoly`]), dense rational matrices and vectors
//! ([`ExactMatrix`], [`ExactVector`]) with exact rank/kernel/inverse/
//! determinant/characteristic-polynomial kernels, and the solver for
//! invariant antisymmetric forms. Everything here is deterministic and
//! float-free.

pub mod matrix;
pub mod poly;
pub mod solve;

pub use matrix::{ExactMatrix, ExactVector};
pub use poly::IntPoly;
pub use solve::invariant_antisymmetric_space;

pub use num_bigint::BigInt;
/// Arbitrary-precision rational, stored reduced with positive denominator.
pub type BigRat = num_rational::BigRational;

use std::fmt;

/// Errors from exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// Matrix dimensions do not admit the requested operation.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Matrix has no inverse.
    Singular,
    /// Polynomial constructor given a non-monic coefficient sequence.
    NonMonic,
    /// Polynomial division left a nonzero remainder.
    InexactDivision,
    /// Operation requires integer entries.
    NonIntegerEntries,
    /// Dimensions or entry counts are inconsistent.
    BadShape(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            ExactError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            ExactError::Singular => write!(f, "matrix is singular"),
            ExactError::NonMonic => write!(f, "polynomial is not monic"),
            ExactError::InexactDivision => write!(f, "polynomial division is not exact"),
            ExactError::NonIntegerEntries => write!(f, "matrix has non-integer entries"),
            ExactError::BadShape(msg) => write!(f, "bad shape: {msg}"),
        }
    }
}

impl std::error::Error for ExactError {}

/// Shorthand for a `BigRat` from an `i64`.
pub fn rat(value: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(value))
}

/// Shorthand for a `BigRat` fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> BigRat {
    BigRat::new(BigInt::from(p), BigInt::from(q))
}
