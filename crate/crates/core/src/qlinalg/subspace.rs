use crate::polyring::{GradedPiece, Poly, Rational};

use super::{LinalgError, QMatrix};

/// The coordinate space a subspace lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `A_d` in `n` variables, coordinatized by [`GradedPiece`].
    Graded { n: usize, d: u32, dim: usize },
    /// Plain `Q^m`.
    Abstract(usize),
}

impl Ambient {
    pub fn of_piece(piece: &GradedPiece) -> Self {
        Ambient::Graded {
            n: piece.nvars(),
            d: piece.degree(),
            dim: piece.dim(),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            Ambient::Graded { dim, .. } => dim,
            Ambient::Abstract(m) => m,
        }
    }
}

/// A linear subspace stored by the RREF basis of its row space.
///
/// Two subspaces of the same ambient are equal exactly when their bases are
/// identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: Ambient,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: Ambient) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: Ambient) -> Self {
        let m = ambient.dim();
        let basis = QMatrix::identity(m).to_rows();
        Subspace {
            ambient,
            basis,
            pivots: (0..m).collect(),
        }
    }

    /// Span of coordinate vectors. Every vector must have the ambient's length.
    pub fn span(ambient: Ambient, vectors: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let m = ambient.dim();
        if let Some(v) = vectors.iter().find(|v| v.len() != m) {
            return Err(LinalgError::LengthMismatch {
                expected: m,
                found: v.len(),
            });
        }
        let r = QMatrix::from_rows_with_cols(vectors, m).rref();
        let mut basis = r.matrix.to_rows();
        basis.truncate(r.rank);
        Ok(Subspace {
            ambient,
            basis,
            pivots: r.pivots,
        })
    }

    /// Span of polynomials inside the graded piece `piece`.
    pub fn span_polys<'a, I>(piece: &GradedPiece, polys: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = &'a Poly>,
    {
        let vectors = polys
            .into_iter()
            .map(|p| piece.coords(p))
            .collect::<Result<Vec<_>, _>>()?;
        Self::span(Ambient::of_piece(piece), vectors)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors read back as polynomials of `piece`.
    pub fn basis_polys(&self, piece: &GradedPiece) -> Vec<Poly> {
        debug_assert_eq!(self.ambient, Ambient::of_piece(piece));
        self.basis.iter().map(|v| piece.poly(v)).collect()
    }

    /// Remainder of `v` after eliminating against the basis; zero iff `v` is
    /// in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let k = r[p].clone();
            if k.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(row).skip(p) {
                if !b.is_zero() {
                    *x -= &(&k * b);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient.dim() && self.reduce(v).iter().all(Rational::is_zero)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient, vectors)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Solve a.S = b.T through the kernel of [S; -T] acting on columns.
        let (k, l, m) = (self.dim(), other.dim(), self.ambient.dim());
        let mut cols = QMatrix::zeros(m, k + l);
        for (i, row) in self.basis.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                cols.set(j, i, v.clone());
            }
        }
        for (i, row) in other.basis.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                cols.set(j, k + i, -v);
            }
        }
        let ker = kernel(&cols);
        let vectors = ker
            .basis
            .iter()
            .map(|coef| combine(&self.basis, &coef[..k], m))
            .collect();
        Subspace::span(self.ambient, vectors)
    }
}

/// `Σ coef[i] * rows[i]`.
pub fn combine(rows: &[Vec<Rational>], coef: &[Rational], m: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m];
    for (row, c) in rows.iter().zip(coef) {
        if c.is_zero() {
            continue;
        }
        for (o, v) in out.iter_mut().zip(row) {
            if !v.is_zero() {
                *o += &(c * v);
            }
        }
    }
    out
}

/// Right null space `{v : M v = 0}` as a canonical subspace of `Q^cols`.
pub fn kernel(m: &QMatrix) -> Subspace {
    let r = m.rref();
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Rational>> = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix.get(row, free);
            }
            v
        })
        .collect();
    Subspace::span(Ambient::Abstract(cols), vectors).expect("kernel vectors have matching length")
}

/// Solution set of `M x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    /// `particular + directions`, with free variables of `particular` set to 0.
    Affine {
        particular: Vec<Rational>,
        directions: Subspace,
    },
}

pub fn solve_linear(m: &QMatrix, b: &[Rational]) -> Result<LinearSolution, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::LengthMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let cols = m.cols();
    let mut aug = QMatrix::zeros(m.rows(), cols + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..cols {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, cols, br.clone());
    }
    let red = aug.rref();
    if red.pivots.last() == Some(&cols) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = vec![Rational::zero(); cols];
    for (row, &p) in red.pivots.iter().enumerate() {
        particular[p] = red.matrix.get(row, cols).clone();
    }
    Ok(LinearSolution::Affine {
        particular,
        directions: kernel(m),
    })
}
