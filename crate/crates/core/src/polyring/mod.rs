//! Exact rationals, sparse multivariate polynomials, graded pieces and the
//! expression parser.

mod graded;
mod monomial;
mod parse;
mod poly;
mod rational;

use thiserror::Error;

pub use graded::{graded_dimension, GradedPiece};
pub use monomial::Monomial;
pub use parse::{parse_poly, ParseError};
pub use poly::{Homogeneity, Poly};
pub use rational::{Rational, RationalParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },
    #[error("A_{d} in {n} variables has dimension {dim}, above the cap {cap}")]
    DimensionCap { n: usize, d: u32, dim: u128, cap: usize },
    #[error("polynomial is not homogeneous of degree {degree}")]
    NotInPiece { degree: u32 },
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("exponent overflow")]
    ExponentOverflow,
}
