use std::collections::BTreeSet;

use serde::Serialize;

use crate::modanalysis::{
    decompose, is_invariant_poly, is_invariant_subspace, Invariance, WeightVector,
};
use crate::polyring::{GradedPiece, Poly};
use crate::qlinalg::{Ambient, Subspace};
use crate::repcore::RepSpec;
use crate::Config;

use super::{jacobian, kempf_witness, quotient_map_check, JacError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YauReport {
    pub f_degree: u64,
    pub f_invariant: bool,
    pub jacobian_invariant: bool,
    pub jacobian_dim: usize,
    pub j_highest_weights: BTreeSet<WeightVector>,
    pub a1_highest_weights: BTreeSet<WeightVector>,
    pub subset_holds: bool,
    /// The invariant whose quotient map realizes `J(f)`: `f` itself when
    /// invariant, otherwise a Kempf witness.
    pub quotient_source: Poly,
    pub quotient_hom: bool,
    pub quotient_kernel_dim: usize,
}

impl YauReport {
    pub fn passed(&self) -> bool {
        self.subset_holds && self.quotient_hom
    }
}

/// Compares the highest weights of an invariant `J(f)` with those of `A_1`,
/// for homogeneous `f` of degree at least 3, and confirms `J(f)` is a
/// quotient of `V` through an invariant with the same Jacobian.
pub fn yau_check(rep: &RepSpec, f: &Poly, cfg: &Config) -> Result<YauReport, JacError> {
    if f.nvars() != rep.dim() {
        return Err(crate::repcore::RepError::VariableCountMismatch {
            expected: rep.dim(),
            found: f.nvars(),
        }
        .into());
    }
    let degree = super::jacobian::form_degree(f)?;
    if degree <= 2 {
        return Err(JacError::DegreeHypothesis { degree });
    }
    let jac = jacobian(f, cfg)?;
    if let Invariance::NotInvariant { generator, element, .. } =
        is_invariant_subspace(rep, &jac.piece, &jac.space)?
    {
        return Err(JacError::JacobianNotInvariant { generator, element });
    }
    let j_dec = decompose(rep, &jac.piece, &jac.space)?;
    let a1 = GradedPiece::new(rep.dim(), 1, cfg.dim_cap)?;
    let a1_dec = decompose(rep, &a1, &Subspace::full(Ambient::of_piece(&a1)))?;
    let subset_holds = j_dec.highest_weight_set.is_subset(&a1_dec.highest_weight_set);

    let f_invariant = is_invariant_poly(rep, f);
    let source = if f_invariant {
        f.clone()
    } else {
        kempf_witness(rep, f, cfg)?
    };
    let q = quotient_map_check(rep, &source, cfg)?;
    Ok(YauReport {
        f_degree: degree,
        f_invariant,
        jacobian_invariant: true,
        jacobian_dim: jac.space.dim(),
        j_highest_weights: j_dec.highest_weight_set,
        a1_highest_weights: a1_dec.highest_weight_set,
        subset_holds,
        quotient_source: source,
        quotient_hom: q.is_hom,
        quotient_kernel_dim: q.kernel_dim,
    })
}
