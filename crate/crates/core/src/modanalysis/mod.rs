//! Weights, invariant subspaces, highest-weight decomposition and invariant
//! polynomials.

mod cayley;
mod decompose;
mod invariance;
mod weights;

use thiserror::Error;

use crate::polyring::{Poly, PolyError};
use crate::qlinalg::LinalgError;
use crate::repcore::RepError;

pub use cayley::{cayley_sylvester, weight_count};
pub use decompose::{decompose, highest_weight_vectors, DecompositionReport, Summand};
pub use invariance::{
    generate_submodule, invariant_basis, invariants, invariants_in, is_invariant_poly,
    is_invariant_subspace, operator_matrix, Invariance,
};
pub use weights::{weight_decomposition, weight_of_monomial, WeightTable, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("cartan generators must be diagonal with integer entries")]
    NonIntegralCartan,
    #[error("subspace does not live in the given graded piece")]
    WrongAmbient,
    #[error("cannot generate a submodule from the zero vector")]
    ZeroVector,
    #[error("subspace is not invariant: {generator} moves {element} out of it")]
    NotInvariant { generator: String, element: Poly },
    #[error(
        "decomposition audit failed: dimension {expected}, generated dimensions sum to \
         {generated_total}, their span has dimension {span_dim}"
    )]
    AuditFailure {
        expected: usize,
        generated_total: usize,
        span_dim: usize,
    },
}
