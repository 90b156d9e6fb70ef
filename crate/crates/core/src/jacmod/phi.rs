use serde::Serialize;

use crate::polyring::{GradedPiece, Homogeneity, Poly};
use crate::repcore::{ModuleAction, RepSpec, TensorElement};
use crate::Config;

use super::JacError;

/// `Σ f_i ⊗ e_i ↦ Σ ∂f_i/∂x_i`. All nonzero parts must be homogeneous of
/// one common degree.
pub fn phi(t: &TensorElement) -> Result<Poly, JacError> {
    let mut degree = None;
    let mut out = Poly::zero(t.nvars());
    for (i, f) in t.parts() {
        let d = match f.homogeneity() {
            Homogeneity::Homogeneous(d) => d,
            _ => return Err(JacError::DegreeMismatch),
        };
        if *degree.get_or_insert(d) != d {
            return Err(JacError::DegreeMismatch);
        }
        out = &out + &f.partial(i)?;
    }
    Ok(out)
}

/// A failed intertwining identity on a basis tensor `x^a ⊗ b_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub generator: String,
    pub monomial: String,
    /// 0-based index of the second tensor factor's basis vector.
    pub index: usize,
    /// The map applied after the action.
    pub lhs: Poly,
    /// The action applied after the map.
    pub rhs: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HomCheck {
    Pass { checked: usize },
    Counterexample(Counterexample),
}

impl HomCheck {
    pub fn passed(&self) -> bool {
        matches!(self, HomCheck::Pass { .. })
    }
}

/// Exhaustively checks `phi(X·(x^a ⊗ e_i)) = X·phi(x^a ⊗ e_i)` for every
/// generator `X`, degree-`d` monomial `x^a` and basis index `i`.
pub fn check_intertwining_phi(rep: &RepSpec, d: u32, cfg: &Config) -> Result<HomCheck, JacError> {
    check_intertwining_with(rep, d, cfg)
}

/// [`check_intertwining_phi`] against arbitrary actions.
pub fn check_intertwining_with<A: ModuleAction + ?Sized>(
    action: &A,
    d: u32,
    cfg: &Config,
) -> Result<HomCheck, JacError> {
    let rep = action.rep();
    let n = rep.dim();
    let piece = GradedPiece::new(n, d, cfg.dim_cap)?;
    let mut checked = 0;
    for (g, gen) in rep.generators().iter().enumerate() {
        for mono in piece.basis() {
            let f = Poly::term(mono.clone(), crate::Rational::one());
            for i in 0..n {
                let t = TensorElement::pure(f.clone(), i);
                let lhs = phi(&action.on_tensor(g, &t))?;
                let rhs = action.on_poly(g, &phi(&t)?);
                if lhs != rhs {
                    return Ok(HomCheck::Counterexample(Counterexample {
                        generator: gen.name.clone(),
                        monomial: mono.to_string(),
                        index: i,
                        lhs,
                        rhs,
                    }));
                }
                checked += 1;
            }
        }
    }
    Ok(HomCheck::Pass { checked })
}
