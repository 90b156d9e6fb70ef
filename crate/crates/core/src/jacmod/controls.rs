//! Deliberately wrong actions for negative-control runs.

use crate::polyring::Poly;
use crate::qlinalg::QMatrix;
use crate::repcore::{derivation, ModuleAction, RepSpec, TensorElement};

/// Acts on `A` correctly but on the `V` factor of `A ⊗ V` by the transposed
/// matrix, which breaks equivariance of `f ⊗ e_i ↦ ∂f/∂x_i` for any
/// non-symmetric generator.
#[derive(Debug, Clone)]
pub struct TransposedTensorAction {
    rep: RepSpec,
    transposed: Vec<QMatrix>,
}

impl TransposedTensorAction {
    pub fn new(rep: &RepSpec) -> Self {
        TransposedTensorAction {
            rep: rep.clone(),
            transposed: rep.generators().iter().map(|g| g.matrix.transpose()).collect(),
        }
    }
}

impl ModuleAction for TransposedTensorAction {
    fn rep(&self) -> &RepSpec {
        &self.rep
    }

    fn on_poly(&self, generator: usize, f: &Poly) -> Poly {
        derivation(&self.rep.generators()[generator].matrix, f)
    }

    fn on_tensor(&self, generator: usize, t: &TensorElement) -> TensorElement {
        let m = &self.rep.generators()[generator].matrix;
        let mt = &self.transposed[generator];
        let mut out = TensorElement::zero(t.nvars());
        for (i, f) in t.parts() {
            out.add(i, &derivation(m, f));
            for j in 0..t.nvars() {
                let v = mt.get(j, i);
                if !v.is_zero() {
                    out.add_scaled(j, f, v);
                }
            }
        }
        out
    }
}
