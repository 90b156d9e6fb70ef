//! Exact linear algebra over the rationals.

mod echelon;
mod matrix;
mod subspace;

use thiserror::Error;

use crate::polyring::PolyError;

pub use echelon::Echelon;
pub use matrix::{QMatrix, Rref};
pub use subspace::{combine, kernel, solve_linear, Ambient, LinearSolution, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("subspaces live in different ambients: {left:?} vs {right:?}")]
    AmbientMismatch { left: Ambient, right: Ambient },
    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
