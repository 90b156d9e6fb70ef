use std::collections::HashMap;

use super::{Monomial, Poly, PolyError, Rational};

/// Number of degree-`d` monomials in `n` variables, `C(n+d-1, d)`, or `None`
/// if it overflows.
pub fn graded_dimension(n: usize, d: u32) -> Option<u128> {
    if n == 0 {
        return Some(if d == 0 { 1 } else { 0 });
    }
    // C(n-1+d, n-1) built up one factor at a time; every prefix is integral.
    let k = (n - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(d as u128 + i)? / i;
    }
    Some(acc)
}

/// Coordinatization of the homogeneous degree-`d` piece of `Q[x1..xn]`.
///
/// The basis lists every degree-`d` monomial in descending graded-lex order
/// (`x1^d` first, `xn^d` last). This order fixes the coordinate system for
/// every subspace built on the piece.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    n: usize,
    d: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedPiece {
    pub fn new(n: usize, d: u32, cap: usize) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::NoVariables);
        }
        let dim = graded_dimension(n, d).unwrap_or(u128::MAX);
        if dim > cap as u128 {
            return Err(PolyError::DimensionCap { n, d, dim, cap });
        }
        let mut basis = Vec::with_capacity(dim as usize);
        let mut exps = vec![0u32; n];
        fill(&mut exps, 0, d, &mut basis);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(GradedPiece { n, d, basis, index })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `f` in the monomial basis.
    pub fn coords(&self, f: &Poly) -> Result<Vec<Rational>, PolyError> {
        if f.nvars() != self.n {
            return Err(PolyError::VariableCountMismatch {
                expected: self.n,
                found: f.nvars(),
            });
        }
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in f.terms() {
            let i = self.index_of(m).ok_or(PolyError::NotInPiece { degree: self.d })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn poly(&self, coords: &[Rational]) -> Poly {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length");
        Poly::from_terms(
            self.n,
            self.basis
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

fn fill(exps: &mut [u32], at: usize, left: u32, out: &mut Vec<Monomial>) {
    if at + 1 == exps.len() {
        exps[at] = left;
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in (0..=left).rev() {
        exps[at] = e;
        fill(exps, at + 1, left - e, out);
    }
    exps[at] = 0;
}
