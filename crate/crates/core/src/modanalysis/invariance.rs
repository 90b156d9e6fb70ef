use crate::polyring::{GradedPiece, Poly};
use crate::qlinalg::{kernel, Ambient, Echelon, QMatrix, Subspace};
use crate::repcore::{derivation, ModuleAction, RepSpec};
use crate::Config;

use super::{AnalysisError, WeightTable};

/// Outcome of an invariance test, with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invariance {
    Invariant,
    NotInvariant {
        generator: String,
        element: Poly,
        image: Poly,
    },
}

impl Invariance {
    pub fn holds(&self) -> bool {
        matches!(self, Invariance::Invariant)
    }
}

/// Matrix of `D_X` on `A_d`: column `c` holds the image of basis monomial `c`.
pub fn operator_matrix(m: &QMatrix, piece: &GradedPiece) -> QMatrix {
    let dim = piece.dim();
    let mut out = QMatrix::zeros(dim, dim);
    for (c, mono) in piece.basis().iter().enumerate() {
        let image = derivation(m, &Poly::term(mono.clone(), crate::Rational::one()));
        for (mm, v) in image.terms() {
            let r = piece.index_of(mm).expect("action preserves degree");
            out.set(r, c, v.clone());
        }
    }
    out
}

/// Whether every generator maps every basis element of `s` back into `s`.
/// The first failure, in generator then basis order, is returned as witness.
pub fn is_invariant_subspace(
    rep: &RepSpec,
    piece: &GradedPiece,
    s: &Subspace,
) -> Result<Invariance, AnalysisError> {
    check_piece(rep, piece, s)?;
    for g in rep.generators() {
        for v in s.basis() {
            let element = piece.poly(v);
            let image = derivation(&g.matrix, &element);
            if !s.contains_vector(&piece.coords(&image)?) {
                return Ok(Invariance::NotInvariant {
                    generator: g.name.clone(),
                    element,
                    image,
                });
            }
        }
    }
    Ok(Invariance::Invariant)
}

pub(crate) fn check_piece(
    rep: &RepSpec,
    piece: &GradedPiece,
    s: &Subspace,
) -> Result<(), AnalysisError> {
    if piece.nvars() != rep.dim() {
        return Err(crate::repcore::RepError::VariableCountMismatch {
            expected: rep.dim(),
            found: piece.nvars(),
        }
        .into());
    }
    if s.ambient() != Ambient::of_piece(piece) {
        return Err(AnalysisError::WrongAmbient);
    }
    Ok(())
}

/// Smallest subspace of `A_d` containing `v` and closed under every
/// generator.
pub fn generate_submodule(
    rep: &RepSpec,
    piece: &GradedPiece,
    v: &Poly,
) -> Result<Subspace, AnalysisError> {
    generate_with(rep, piece, v)
}

pub(crate) fn generate_with<A: ModuleAction + ?Sized>(
    action: &A,
    piece: &GradedPiece,
    v: &Poly,
) -> Result<Subspace, AnalysisError> {
    if v.is_zero() {
        return Err(AnalysisError::ZeroVector);
    }
    let mut span = Echelon::new(Ambient::of_piece(piece));
    span.insert(&piece.coords(v)?);
    let mut frontier = vec![v.clone()];
    let ngen = action.rep().generators().len();
    while let Some(w) = frontier.pop() {
        for g in 0..ngen {
            let u = action.on_poly(g, &w);
            if u.is_zero() {
                continue;
            }
            if span.insert(&piece.coords(&u)?) {
                frontier.push(u);
            }
        }
    }
    Ok(span.into_subspace())
}

/// Polynomials of degree `d` annihilated by every generator.
pub fn invariants(rep: &RepSpec, d: u32, cfg: &Config) -> Result<Subspace, AnalysisError> {
    let piece = GradedPiece::new(rep.dim(), d, cfg.dim_cap)?;
    invariants_in(rep, &piece)
}

/// [`invariants`] on an already built piece.
pub fn invariants_in(rep: &RepSpec, piece: &GradedPiece) -> Result<Subspace, AnalysisError> {
    if piece.nvars() != rep.dim() {
        return Err(crate::repcore::RepError::VariableCountMismatch {
            expected: rep.dim(),
            found: piece.nvars(),
        }
        .into());
    }
    let table = WeightTable::new(rep)?;
    let ambient = Ambient::of_piece(piece);
    // Cartan generators act diagonally on monomials, so their joint kernel
    // is spanned by the monomials of weight zero.
    let candidates: Vec<usize> = piece
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, m)| table.monomial(m).is_zero())
        .map(|(i, _)| i)
        .collect();
    if candidates.is_empty() {
        return Ok(Subspace::zero(ambient));
    }
    let others: Vec<&QMatrix> = rep
        .generators()
        .iter()
        .filter(|g| g.role != crate::repcore::Role::Cartan)
        .map(|g| &g.matrix)
        .collect();
    let dim = piece.dim();
    let mut stacked = QMatrix::zeros(others.len() * dim, candidates.len());
    for (c, &i) in candidates.iter().enumerate() {
        let mono = Poly::term(piece.basis()[i].clone(), crate::Rational::one());
        for (g, m) in others.iter().enumerate() {
            for (mm, v) in derivation(m, &mono).terms() {
                let r = piece.index_of(mm).expect("action preserves degree");
                stacked.set(g * dim + r, c, v.clone());
            }
        }
    }
    let ker = kernel(&stacked);
    let vectors = ker
        .basis()
        .iter()
        .map(|coef| {
            let mut v = vec![crate::Rational::zero(); dim];
            for (c, &i) in candidates.iter().enumerate() {
                v[i] = coef[c].clone();
            }
            v
        })
        .collect();
    Ok(Subspace::span(ambient, vectors)?)
}

/// Basis polynomials of [`invariants`].
pub fn invariant_basis(rep: &RepSpec, d: u32, cfg: &Config) -> Result<Vec<Poly>, AnalysisError> {
    let piece = GradedPiece::new(rep.dim(), d, cfg.dim_cap)?;
    Ok(invariants_in(rep, &piece)?.basis_polys(&piece))
}

/// Whether every generator annihilates `f`.
pub fn is_invariant_poly(rep: &RepSpec, f: &Poly) -> bool {
    rep.generators()
        .iter()
        .all(|g| derivation(&g.matrix, f).is_zero())
}
