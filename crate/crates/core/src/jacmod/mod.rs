//! Executable checks for the module structure on Jacobians: the map
//! `A ⊗ V → A`, the quotient map `V → J(f)`, highest-weight containment,
//! Kempf witnesses, the sl₂ mirror map and a randomized harness over all of
//! them.

mod controls;
mod fuzz;
mod jacobian;
mod kempf;
mod mirror;
mod phi;
mod yau;

use thiserror::Error;

use crate::modanalysis::AnalysisError;
use crate::polyring::{Poly, PolyError};
use crate::qlinalg::LinalgError;
use crate::repcore::RepError;

pub use controls::TransposedTensorAction;
pub use fuzz::{fuzz_harness, CheckOutcome, FuzzOptions, FuzzSummary, TrialRecord};
pub use jacobian::{jacobian, jacobian_subspace, quotient_map_check, Jacobian, QuotientCheck};
pub use kempf::kempf_witness;
pub use mirror::{check_psi_hom, equivariant_mirror_map, MirrorMap, MirrorSummand};
pub use phi::{check_intertwining_phi, check_intertwining_with, phi, Counterexample, HomCheck};
pub use yau::{yau_check, YauReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("the zero polynomial has no Jacobian structure to check")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is constant; its Jacobian is zero")]
    ConstantPolynomial,
    #[error("tensor parts have different degrees")]
    DegreeMismatch,
    #[error("degree ≤ 2: theorem hypothesis unmet (degree {degree})")]
    DegreeHypothesis { degree: u64 },
    #[error("J(f) not invariant: {generator} maps {element} outside J(f)")]
    JacobianNotInvariant { generator: String, element: Poly },
    #[error("no Kempf witness found after {tried} candidates")]
    KempfNotFound { tried: usize },
    #[error("summand {summand}: the mirror-map equations admit only zero")]
    MirrorNoneExists { summand: usize },
    #[error("summand {summand}: mirror-map solution space has dimension {dim}, expected 1")]
    MirrorNotUnique { summand: usize, dim: usize },
    #[error("not a direct sum of sl2 irreducibles in builder form: {0}")]
    NotSl2Sum(String),
}
