use std::collections::BTreeMap;

use serde::Serialize;

use crate::polyring::{GradedPiece, Monomial, Poly, Rational};
use crate::qlinalg::{kernel, QMatrix};
use crate::repcore::{derivation, RepSpec, Role, TensorElement};
use crate::Config;

use super::{Counterexample, HomCheck, JacError};

/// Coefficients of the mirror map on one irreducible summand of `A_1`.
///
/// The summand occupies coordinates `offset..=offset+m`; `x_{offset+j}` is
/// sent to `coefficients[j]` times the partial derivative in the
/// opposite-weight coordinate `x_{offset+m-j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorSummand {
    pub offset: usize,
    pub highest_weight: u32,
    pub coefficients: Vec<Rational>,
    /// Dimension of the solution space of the intertwining equations.
    pub solution_dim: usize,
    /// Every coefficient is nonzero and consecutive ones differ in sign.
    pub alternates: bool,
}

/// `ψ: A ⊗ A_1 → A`, `f ⊗ x_k ↦ c_k ∂f/∂x_{k'}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorMap {
    pub n: usize,
    pub summands: Vec<MirrorSummand>,
}

impl MirrorMap {
    /// Partner coordinate and coefficient for `x_k`.
    pub fn partner(&self, k: usize) -> (usize, &Rational) {
        let s = self
            .summands
            .iter()
            .find(|s| k >= s.offset && k <= s.offset + s.highest_weight as usize)
            .expect("coordinate covered by a summand");
        let j = k - s.offset;
        (s.offset + s.highest_weight as usize - j, &s.coefficients[j])
    }

    /// `ψ(Σ f_k ⊗ x_k)`.
    pub fn apply(&self, t: &TensorElement) -> Poly {
        let mut out = Poly::zero(self.n);
        for (k, f) in t.parts() {
            let (partner, c) = self.partner(k);
            out.add_scaled(&f.partial(partner).expect("partner in range"), c);
        }
        out
    }

    /// Copy with the sign of one coefficient flipped.
    pub fn with_flipped_sign(&self, summand: usize, j: usize) -> MirrorMap {
        let mut out = self.clone();
        let c = &mut out.summands[summand].coefficients[j];
        *c = -&*c;
        out
    }
}

/// Irreducible blocks `(offset, m)` of a builder-form sum of sl₂ irreducibles.
fn sl2_blocks(rep: &RepSpec) -> Result<Vec<(usize, u32)>, JacError> {
    let not = |msg: &str| JacError::NotSl2Sum(msg.to_string());
    let gens = rep.generators();
    let cartans: Vec<_> = gens.iter().filter(|g| g.role == Role::Cartan).collect();
    if cartans.len() != 1 || rep.sl2_triples().len() != 1 || gens.len() != 3 {
        return Err(not("expected exactly one sl2 triple and no other generators"));
    }
    let h = &cartans[0].matrix;
    let n = rep.dim();
    // Block boundaries: no generator may couple coordinates across them.
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < n {
        let top = h.get(start, start).to_i64().ok_or_else(|| not("non-integer cartan"))?;
        if top < 0 {
            return Err(not("block does not start at its highest weight"));
        }
        let m = top as usize;
        if start + m >= n {
            return Err(not("block runs past the end of the space"));
        }
        for j in 0..=m {
            if h.get(start + j, start + j).to_i64() != Some(top - 2 * j as i64) {
                return Err(not("cartan diagonal is not m, m-2, ..., -m within a block"));
            }
        }
        blocks.push((start, m as u32));
        start += m + 1;
    }
    let block_of = |i: usize| blocks.iter().position(|&(o, m)| i >= o && i <= o + m as usize);
    for g in gens {
        for r in 0..n {
            for c in 0..n {
                if !g.matrix.get(r, c).is_zero() && block_of(r) != block_of(c) {
                    return Err(not("generators couple different blocks"));
                }
            }
        }
    }
    Ok(blocks)
}

/// Solves the intertwining equations for the mirror-map coefficients of
/// every summand of `A_1`, using test polynomials of degrees
/// `1..=cfg.mirror_max_degree`. Each solution space must be a line; its
/// representative with first coefficient 1 is returned.
pub fn equivariant_mirror_map(rep: &RepSpec, cfg: &Config) -> Result<MirrorMap, JacError> {
    let blocks = sl2_blocks(rep)?;
    let n = rep.dim();
    let pieces: Vec<GradedPiece> = (1..=cfg.mirror_max_degree.max(1))
        .map(|d| GradedPiece::new(n, d, cfg.dim_cap))
        .collect::<Result<_, _>>()?;
    let mut summands = Vec::new();
    for (s, &(offset, m)) in blocks.iter().enumerate() {
        let size = m as usize + 1;
        let partner = |j: usize| offset + m as usize - j;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for g in rep.generators() {
            let mat = &g.matrix;
            for piece in &pieces {
                for mono in piece.basis() {
                    let f = Poly::term(mono.clone(), Rational::one());
                    let xf = derivation(mat, &f);
                    for j in 0..size {
                        // residual = Σ_u c_u P_u, collected per monomial.
                        let mut eq: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
                        let mut put = |u: usize, p: &Poly, scale: &Rational| {
                            for (mm, v) in p.terms() {
                                let row = eq
                                    .entry(mm.clone())
                                    .or_insert_with(|| vec![Rational::zero(); size]);
                                row[u] += &(v * scale);
                            }
                        };
                        let one = Rational::one();
                        let pj = partner(j);
                        put(j, &xf.partial(pj)?, &one);
                        put(j, &derivation(mat, &f.partial(pj)?), &-&one);
                        for l in 0..size {
                            let mjl = mat.get(offset + j, offset + l);
                            if !mjl.is_zero() {
                                put(l, &f.partial(partner(l))?, &-mjl);
                            }
                        }
                        rows.extend(eq.into_values().filter(|r| r.iter().any(|v| !v.is_zero())));
                    }
                }
            }
        }
        let solutions = if rows.is_empty() {
            crate::qlinalg::Subspace::full(crate::qlinalg::Ambient::Abstract(size))
        } else {
            kernel(&QMatrix::from_rows_with_cols(rows, size))
        };
        match solutions.dim() {
            0 => return Err(JacError::MirrorNoneExists { summand: s }),
            1 => {}
            dim => return Err(JacError::MirrorNotUnique { summand: s, dim }),
        }
        // RREF already puts a leading 1 on the first nonzero coefficient.
        let coefficients = solutions.basis()[0].clone();
        let alternates = coefficients.iter().all(|c| !c.is_zero())
            && coefficients
                .windows(2)
                .all(|w| w[0].is_negative() != w[1].is_negative());
        summands.push(MirrorSummand {
            offset,
            highest_weight: m,
            coefficients,
            solution_dim: 1,
            alternates,
        });
    }
    Ok(MirrorMap { n, summands })
}

/// `X·(f ⊗ x_k) = (X·f) ⊗ x_k + f ⊗ (X·x_k)` on `A ⊗ A_1`.
fn a1_tensor_action(m: &QMatrix, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.nvars());
    for (k, f) in t.parts() {
        out.add(k, &derivation(m, f));
        for l in 0..t.nvars() {
            let mkl = m.get(k, l);
            if !mkl.is_zero() {
                out.add_scaled(l, f, &-mkl);
            }
        }
    }
    out
}

/// Exhaustive intertwining check of `mirror` on `A_d ⊗ A_1`.
pub fn check_psi_hom(
    rep: &RepSpec,
    mirror: &MirrorMap,
    d: u32,
    cfg: &Config,
) -> Result<HomCheck, JacError> {
    let n = rep.dim();
    let piece = GradedPiece::new(n, d, cfg.dim_cap)?;
    let mut checked = 0;
    for g in rep.generators() {
        for mono in piece.basis() {
            let f = Poly::term(mono.clone(), Rational::one());
            for k in 0..n {
                let t = TensorElement::pure(f.clone(), k);
                let lhs = mirror.apply(&a1_tensor_action(&g.matrix, &t));
                let rhs = derivation(&g.matrix, &mirror.apply(&t));
                if lhs != rhs {
                    return Ok(HomCheck::Counterexample(Counterexample {
                        generator: g.name.clone(),
                        monomial: mono.to_string(),
                        index: k,
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
