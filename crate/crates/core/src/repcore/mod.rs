//! Representations given by tagged generator matrices, standard builders,
//! and the induced actions on `V`, `A` and `A ⊗ V`.

mod action;
mod builders;
mod rep;

use thiserror::Error;

pub use action::{
    act_on_poly, act_on_tensor, coaction_on_x, derivation, tensor_action, ModuleAction,
    TensorElement,
};
pub use builders::{direct_sum, dual_rep, sl2_irrep, sl2_sum, sln_standard};
pub use rep::{Generator, RepSpec, Role, Sl2Triple, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("variable count mismatch: representation has dimension {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("direct sum of no representations")]
    EmptySum,
    #[error("summand {summand} has a different generator list")]
    GeneratorMismatch { summand: usize },
    #[error("{0}")]
    InvalidParameter(String),
    #[error("invalid representation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}
