use std::collections::BTreeSet;

use serde::Serialize;

use crate::polyring::{GradedPiece, Poly, Rational};
use crate::qlinalg::{combine, kernel, Ambient, Echelon, QMatrix, Subspace};
use crate::repcore::{derivation, RepSpec, Role};

use super::invariance::{check_piece, generate_with};
use super::{is_invariant_subspace, weight_decomposition, AnalysisError, Invariance, WeightVector};

/// One irreducible summand found by [`decompose`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub highest_weight: WeightVector,
    /// Coordinates of the highest-weight vector in the piece's monomial basis.
    #[serde(skip)]
    pub hwv: Vec<Rational>,
    /// The same vector as a polynomial.
    #[serde(rename = "hwv")]
    pub hwv_poly: Poly,
    pub generated_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    pub total_dim: usize,
    pub highest_weight_set: BTreeSet<WeightVector>,
}

/// Per weight, the vectors of `s` of that weight killed by every raising
/// generator. Weights are listed in descending order; empty blocks are
/// omitted. `s` must be invariant.
pub fn highest_weight_vectors(
    rep: &RepSpec,
    piece: &GradedPiece,
    s: &Subspace,
) -> Result<Vec<(WeightVector, Subspace)>, AnalysisError> {
    check_piece(rep, piece, s)?;
    if let Invariance::NotInvariant { generator, element, .. } = is_invariant_subspace(rep, piece, s)? {
        return Err(AnalysisError::NotInvariant { generator, element });
    }
    let raising: Vec<&QMatrix> = rep
        .indices_with_role(Role::Raising)
        .map(|i| &rep.generators()[i].matrix)
        .collect();
    let dim = piece.dim();
    let mut out = Vec::new();
    for (w, block) in weight_decomposition(rep, piece, s)?.into_iter().rev() {
        let basis = block.basis();
        let k = basis.len();
        let mut images = QMatrix::zeros(raising.len() * dim, k);
        for (c, b) in basis.iter().enumerate() {
            let p = piece.poly(b);
            for (g, m) in raising.iter().enumerate() {
                for (mono, v) in derivation(m, &p).terms() {
                    let r = piece.index_of(mono).expect("action preserves degree");
                    images.set(g * dim + r, c, v.clone());
                }
            }
        }
        let ker = kernel(&images);
        if ker.is_zero() {
            continue;
        }
        let vectors = ker.basis().iter().map(|coef| combine(basis, coef, dim)).collect();
        out.push((w, Subspace::span(Ambient::of_piece(piece), vectors)?));
    }
    Ok(out)
}

/// Splits an invariant subspace into the submodules generated by a basis of
/// highest-weight vectors, and audits that they fill `s` independently.
pub fn decompose(
    rep: &RepSpec,
    piece: &GradedPiece,
    s: &Subspace,
) -> Result<DecompositionReport, AnalysisError> {
    let hw = highest_weight_vectors(rep, piece, s)?;
    let mut summands = Vec::new();
    let mut total = Echelon::new(Ambient::of_piece(piece));
    for (w, space) in hw {
        for v in space.basis() {
            let hwv_poly = piece.poly(v);
            let generated = generate_with(rep, piece, &hwv_poly)?;
            for b in generated.basis() {
                total.insert(b);
            }
            summands.push(Summand {
                highest_weight: w.clone(),
                hwv: v.clone(),
                hwv_poly,
                generated_dim: generated.dim(),
            });
        }
    }
    let generated_total: usize = summands.iter().map(|s| s.generated_dim).sum();
    if generated_total != s.dim() || total.dim() != s.dim() {
        return Err(AnalysisError::AuditFailure {
            expected: s.dim(),
            generated_total,
            span_dim: total.dim(),
        });
    }
    let highest_weight_set = summands.iter().map(|s| s.highest_weight.clone()).collect();
    Ok(DecompositionReport {
        summands,
        total_dim: s.dim(),
        highest_weight_set,
    })
}
