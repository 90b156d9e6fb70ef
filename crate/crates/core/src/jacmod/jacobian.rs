use serde::Serialize;

use crate::polyring::{GradedPiece, Homogeneity, Poly};
use crate::qlinalg::Subspace;
use crate::repcore::RepSpec;
use crate::Config;

use super::JacError;

/// `J(f)` together with the graded piece `A_{d-1}` it lives in.
#[derive(Debug, Clone)]
pub struct Jacobian {
    pub degree: u64,
    pub piece: GradedPiece,
    pub partials: Vec<Poly>,
    pub space: Subspace,
}

/// Degree of a nonzero homogeneous polynomial of positive degree.
pub(crate) fn form_degree(f: &Poly) -> Result<u64, JacError> {
    match f.homogeneity() {
        Homogeneity::Zero => Err(JacError::ZeroPolynomial),
        Homogeneity::Mixed => Err(JacError::NotHomogeneous),
        Homogeneity::Homogeneous(0) => Err(JacError::ConstantPolynomial),
        Homogeneity::Homogeneous(d) => Ok(d),
    }
}

pub fn jacobian(f: &Poly, cfg: &Config) -> Result<Jacobian, JacError> {
    let d = form_degree(f)?;
    let below = u32::try_from(d - 1).map_err(|_| crate::polyring::PolyError::ExponentOverflow)?;
    let piece = GradedPiece::new(f.nvars(), below, cfg.dim_cap)?;
    let partials = f.gradient();
    let space = Subspace::span_polys(&piece, &partials)?;
    Ok(Jacobian {
        degree: d,
        piece,
        partials,
        space,
    })
}

/// Span of the partial derivatives of a homogeneous `f` inside `A_{d-1}`.
pub fn jacobian_subspace(f: &Poly, cfg: &Config) -> Result<Subspace, JacError> {
    Ok(jacobian(f, cfg)?.space)
}

/// Whether `e_i ↦ ∂f/∂x_i` is a module map `V → J(f)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub is_hom: bool,
    pub kernel_dim: usize,
    pub image_dim: usize,
    /// First generator and basis index (0-based) where equivariance fails.
    pub failure: Option<(String, usize)>,
}

pub fn quotient_map_check(rep: &RepSpec, f: &Poly, cfg: &Config) -> Result<QuotientCheck, JacError> {
    if f.nvars() != rep.dim() {
        return Err(crate::repcore::RepError::VariableCountMismatch {
            expected: rep.dim(),
            found: f.nvars(),
        }
        .into());
    }
    let jac = jacobian(f, cfg)?;
    let n = rep.dim();
    let mut failure = None;
    'outer: for g in rep.generators() {
        for i in 0..n {
            // q(X e_i) = Σ_j M_ji ∂_j f against X·q(e_i).
            let mut lhs = Poly::zero(n);
            for j in 0..n {
                lhs.add_scaled(&jac.partials[j], g.matrix.get(j, i));
            }
            let rhs = crate::repcore::derivation(&g.matrix, &jac.partials[i]);
            if lhs != rhs {
                failure = Some((g.name.clone(), i));
                break 'outer;
            }
        }
    }
    let image_dim = jac.space.dim();
    Ok(QuotientCheck {
        is_hom: failure.is_none(),
        kernel_dim: n - image_dim,
        image_dim,
        failure,
    })
}
