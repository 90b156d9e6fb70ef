use crate::polyring::Rational;

use super::{Ambient, Subspace};

/// Row echelon basis grown one vector at a time.
///
/// Each stored row has a leading 1 at its pivot and zeros at the pivots of
/// earlier rows, so reducing against the rows in insertion order decides
/// membership exactly.
#[derive(Debug, Clone)]
pub struct Echelon {
    ambient: Ambient,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ambient: Ambient) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
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

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient.dim(), "vector length");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero pivot");
        for x in r.iter_mut().skip(p) {
            *x *= &inv;
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.ambient, self.rows).expect("rows match the ambient")
    }
}
