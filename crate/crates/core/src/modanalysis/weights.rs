use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::polyring::{GradedPiece, Monomial};
use crate::qlinalg::{Ambient, Subspace};
use crate::repcore::RepSpec;

use super::AnalysisError;

/// Eigenvalues of the cartan generators, in generator order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(len: usize) -> Self {
        WeightVector(vec![0; len])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Integer cartan diagonals of a representation, ready for weight lookups.
#[derive(Debug, Clone)]
pub struct WeightTable {
    diagonals: Vec<Vec<i64>>,
}

impl WeightTable {
    pub fn new(rep: &RepSpec) -> Result<Self, AnalysisError> {
        let diagonals = rep
            .cartan_diagonals()
            .into_iter()
            .map(|d| d.ok_or(AnalysisError::NonIntegralCartan))
            .collect::<Result<Vec<_>, _>>()?;
        let diagonal_ok = rep
            .generators()
            .iter()
            .filter(|g| g.role == crate::repcore::Role::Cartan)
            .all(|g| g.matrix.is_diagonal());
        if !diagonal_ok {
            return Err(AnalysisError::NonIntegralCartan);
        }
        Ok(WeightTable { diagonals })
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    /// Weight of `x^a`: `-Σ_k a_k H_kk` for each cartan `H`.
    pub fn monomial(&self, m: &Monomial) -> WeightVector {
        WeightVector(
            self.diagonals
                .iter()
                .map(|diag| {
                    -diag
                        .iter()
                        .zip(m.exponents())
                        .map(|(h, &a)| h * a as i64)
                        .sum::<i64>()
                })
                .collect(),
        )
    }

    /// Basis indices of `piece` grouped by monomial weight.
    pub fn strata(&self, piece: &GradedPiece) -> BTreeMap<WeightVector, Vec<usize>> {
        let mut out: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
        for (i, m) in piece.basis().iter().enumerate() {
            out.entry(self.monomial(m)).or_default().push(i);
        }
        out
    }
}

pub fn weight_of_monomial(rep: &RepSpec, mono: &Monomial) -> Result<WeightVector, AnalysisError> {
    Ok(WeightTable::new(rep)?.monomial(mono))
}

/// Intersections of `s` with the monomial weight strata of `piece`; only
/// nonzero blocks are returned. For a cartan-stable `s` the block dimensions
/// add up to `dim s`.
pub fn weight_decomposition(
    rep: &RepSpec,
    piece: &GradedPiece,
    s: &Subspace,
) -> Result<BTreeMap<WeightVector, Subspace>, AnalysisError> {
    let table = WeightTable::new(rep)?;
    let ambient = Ambient::of_piece(piece);
    let mut out = BTreeMap::new();
    if s.is_zero() {
        return Ok(out);
    }
    for (w, idx) in table.strata(piece) {
        let stratum = Subspace::span(
            ambient,
            idx.iter()
                .map(|&i| {
                    let mut v = vec![crate::Rational::zero(); piece.dim()];
                    v[i] = crate::Rational::one();
                    v
                })
                .collect(),
        )?;
        let block = s.intersect(&stratum)?;
        if !block.is_zero() {
            out.insert(w, block);
        }
    }
    Ok(out)
}
