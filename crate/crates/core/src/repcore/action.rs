//! Induced actions of a representation on `A = Q[x1..xn]` and on `A ⊗ V`.
//!
//! A generator with matrix `M` acts on coordinate functions by
//! `X·x_k = -Σ_j M_kj x_j` (the contragredient action), and on `A` by the
//! derivation extending it, `D_X = Σ_k (X·x_k) ∂/∂x_k`.

use std::collections::BTreeMap;
use std::fmt;

use crate::polyring::{Monomial, Poly, Rational};
use crate::qlinalg::QMatrix;

use super::{RepError, RepSpec};

/// `D_X f` for the generator with matrix `m`.
pub fn derivation(m: &QMatrix, f: &Poly) -> Poly {
    let n = f.nvars();
    debug_assert_eq!(m.rows(), n);
    let mut out = Poly::zero(n);
    for (mono, c) in f.terms() {
        for k in 0..n {
            let a = mono.exponent(k);
            if a == 0 {
                continue;
            }
            let ca = c * &Rational::from_integer(a as i64);
            for j in 0..n {
                let mkj = m.get(k, j);
                if mkj.is_zero() {
                    continue;
                }
                let mut e = mono.clone();
                let exps = e.exponents_mut();
                exps[k] -= 1;
                exps[j] = exps[j].checked_add(1).expect("exponent overflow");
                out.add_term(e, -(&ca * mkj));
            }
        }
    }
    out
}

/// The linear form `X·x_k = -Σ_j M_kj x_j`, with `k` 0-based.
pub fn coaction_on_x(rep: &RepSpec, generator: &str, k: usize) -> Result<Poly, RepError> {
    let g = rep.generator(generator)?;
    let n = rep.dim();
    if k >= n {
        return Err(RepError::VariableOutOfRange { index: k, nvars: n });
    }
    Ok(Poly::from_terms(
        n,
        (0..n).map(|j| (Monomial::var(n, j), -g.matrix.get(k, j))),
    ))
}

fn check_nvars(rep: &RepSpec, found: usize) -> Result<(), RepError> {
    if found != rep.dim() {
        return Err(RepError::VariableCountMismatch {
            expected: rep.dim(),
            found,
        });
    }
    Ok(())
}

pub fn act_on_poly(rep: &RepSpec, generator: &str, f: &Poly) -> Result<Poly, RepError> {
    check_nvars(rep, f.nvars())?;
    Ok(derivation(&rep.generator(generator)?.matrix, f))
}

/// A finite sum `Σ f_i ⊗ e_i` in `A ⊗ V`, one polynomial per basis index.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: usize,
    parts: BTreeMap<usize, Poly>,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement {
            n,
            parts: BTreeMap::new(),
        }
    }

    /// `f ⊗ e_i`.
    pub fn pure(f: Poly, i: usize) -> Self {
        let mut t = Self::zero(f.nvars());
        t.add(i, &f);
        t
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Nonzero parts in basis-index order.
    pub fn parts(&self) -> impl Iterator<Item = (usize, &Poly)> + '_ {
        self.parts.iter().map(|(i, p)| (*i, p))
    }

    pub fn part(&self, i: usize) -> Option<&Poly> {
        self.parts.get(&i)
    }

    /// Adds `f ⊗ e_i`.
    pub fn add(&mut self, i: usize, f: &Poly) {
        self.add_scaled(i, f, &Rational::one());
    }

    pub fn add_scaled(&mut self, i: usize, f: &Poly, c: &Rational) {
        assert!(i < self.n, "basis index out of range");
        assert_eq!(f.nvars(), self.n, "variable count mismatch");
        if f.is_zero() || c.is_zero() {
            return;
        }
        let slot = self.parts.entry(i).or_insert_with(|| Poly::zero(self.n));
        slot.add_scaled(f, c);
        if slot.is_zero() {
            self.parts.remove(&i);
        }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, p)) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})⊗e{}", i + 1)?;
        }
        Ok(())
    }
}

/// `X·(f ⊗ e_i) = (X·f) ⊗ e_i + Σ_j M_ji f ⊗ e_j` for the matrix `m`.
pub fn tensor_action(m: &QMatrix, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.n);
    for (i, f) in t.parts() {
        out.add(i, &derivation(m, f));
        for j in 0..t.n {
            let mji = m.get(j, i);
            if !mji.is_zero() {
                out.add_scaled(j, f, mji);
            }
        }
    }
    out
}

pub fn act_on_tensor(
    rep: &RepSpec,
    generator: &str,
    t: &TensorElement,
) -> Result<TensorElement, RepError> {
    check_nvars(rep, t.nvars())?;
    Ok(tensor_action(&rep.generator(generator)?.matrix, t))
}

/// The actions a module-homomorphism check is run against.
///
/// [`RepSpec`] provides the standard actions; alternative implementations
/// exist to feed deliberately wrong actions into the checks.
pub trait ModuleAction: Sync {
    fn rep(&self) -> &RepSpec;
    fn on_poly(&self, generator: usize, f: &Poly) -> Poly;
    fn on_tensor(&self, generator: usize, t: &TensorElement) -> TensorElement;
}

impl ModuleAction for RepSpec {
    fn rep(&self) -> &RepSpec {
        self
    }

    fn on_poly(&self, generator: usize, f: &Poly) -> Poly {
        derivation(&self.generators()[generator].matrix, f)
    }

    fn on_tensor(&self, generator: usize, t: &TensorElement) -> TensorElement {
        tensor_action(&self.generators()[generator].matrix, t)
    }
}
