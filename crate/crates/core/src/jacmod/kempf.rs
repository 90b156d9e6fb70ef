use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::modanalysis::{invariants_in, is_invariant_subspace, Invariance};
use crate::polyring::{GradedPiece, Poly, Rational};
use crate::qlinalg::{kernel, QMatrix, Subspace};
use crate::repcore::RepSpec;
use crate::Config;

use super::{jacobian, JacError};

/// An invariant `g` of the same degree as `f` with `J(g) = J(f)`.
///
/// The invariants `g` with every `∂g/∂x_i ∈ J(f)` form a linear space; a
/// member with `dim J(g) = dim J(f)` is searched for first among small
/// integer combinations of its basis (by increasing height), then among
/// seeded random rational combinations. The result is scaled to have
/// leading coefficient 1.
pub fn kempf_witness(rep: &RepSpec, f: &Poly, cfg: &Config) -> Result<Poly, JacError> {
    if f.nvars() != rep.dim() {
        return Err(crate::repcore::RepError::VariableCountMismatch {
            expected: rep.dim(),
            found: f.nvars(),
        }
        .into());
    }
    let jac = jacobian(f, cfg)?;
    if let Invariance::NotInvariant { generator, element, .. } =
        is_invariant_subspace(rep, &jac.piece, &jac.space)?
    {
        return Err(JacError::JacobianNotInvariant { generator, element });
    }
    let n = rep.dim();
    let piece = GradedPiece::new(n, jac.degree as u32, cfg.dim_cap)?;
    let inv = invariants_in(rep, &piece)?.basis_polys(&piece);
    if inv.is_empty() {
        return Err(JacError::KempfNotFound { tried: 0 });
    }

    // Linear conditions y · ∂g/∂x_i = 0 for every annihilator y of J(f).
    let below = jac.piece.dim();
    let jmat = QMatrix::from_rows_with_cols(jac.space.basis().to_vec(), below);
    let annihilator = kernel(&jmat);
    let grads: Vec<Vec<Vec<Rational>>> = inv
        .iter()
        .map(|g| {
            g.gradient()
                .iter()
                .map(|p| jac.piece.coords(p))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for y in annihilator.basis() {
        for i in 0..n {
            rows.push(
                grads
                    .iter()
                    .map(|gl| dot(y, &gl[i]))
                    .collect::<Vec<Rational>>(),
            );
        }
    }
    let solutions = if rows.is_empty() {
        Subspace::full(crate::qlinalg::Ambient::Abstract(inv.len()))
    } else {
        kernel(&QMatrix::from_rows_with_cols(rows, inv.len()))
    };
    if solutions.is_zero() {
        return Err(JacError::KempfNotFound { tried: 0 });
    }
    let directions: Vec<Poly> = solutions
        .basis()
        .iter()
        .map(|c| {
            let mut g = Poly::zero(n);
            for (cl, gl) in c.iter().zip(&inv) {
                g.add_scaled(gl, cl);
            }
            g
        })
        .collect();

    let target = jac.space.dim();
    let accept = |g: &Poly| -> Result<bool, JacError> {
        if g.is_zero() {
            return Ok(false);
        }
        let span = Subspace::span_polys(&jac.piece, &g.gradient())?;
        Ok(span.dim() == target)
    };
    let combine = |coef: &[Rational]| {
        let mut g = Poly::zero(n);
        for (c, d) in coef.iter().zip(&directions) {
            g.add_scaled(d, c);
        }
        g
    };

    let budget = &cfg.kempf;
    let mut tried = 0;
    let k = directions.len();
    'heights: for h in 1..=budget.max_height as i64 {
        let alphabet: Vec<i64> = std::iter::once(0)
            .chain((1..=h).flat_map(|v| [v, -v]))
            .collect();
        let mut digits = vec![0usize; k];
        loop {
            if digits.iter().any(|&i| alphabet[i].abs() == h) {
                if tried >= budget.max_candidates {
                    break 'heights;
                }
                tried += 1;
                let coef: Vec<Rational> =
                    digits.iter().map(|&i| Rational::from_integer(alphabet[i])).collect();
                let g = combine(&coef);
                if accept(&g)? {
                    return Ok(g.monic());
                }
            }
            if !advance(&mut digits, alphabet.len()) {
                break;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    for _ in 0..budget.random_trials {
        tried += 1;
        let coef: Vec<Rational> = (0..k)
            .map(|_| {
                let num = rng.gen_range(-64i64..=64);
                let den = rng.gen_range(1i64..=16);
                Rational::from_ratio(num, den).expect("positive denominator")
            })
            .collect();
        let g = combine(&coef);
        if accept(&g)? {
            return Ok(g.monic());
        }
    }
    Err(JacError::KempfNotFound { tried })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Mixed-radix increment, least significant digit last; false on wrap.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}
