//! Test oracles that only evaluate polynomials at points. None of them call
//! the crate's derivative or action code.

#![allow(dead_code)]

use invjac::polyring::Monomial;
use invjac::{parse_poly, Poly, QMatrix, Rational};
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn qr(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d).unwrap()
}

pub fn p(text: &str, n: usize) -> Poly {
    parse_poly(text, n).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    qr(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&e)
}

pub fn random_homogeneous<R: Rng>(rng: &mut R, n: usize, d: u32, terms: usize) -> Poly {
    Poly::from_terms(
        n,
        (0..terms).map(|_| (random_monomial(rng, n, d), random_rational(rng))),
    )
}

/// `d/dt g(p + t v)` at `t = 0` for `g` polynomial of degree at most `deg`
/// along the line, from Newton forward differences at `t = 0..=deg`.
pub fn directional_derivative<G>(g: G, deg: usize, p: &[Rational], v: &[Rational]) -> Rational
where
    G: Fn(&[Rational]) -> Rational,
{
    let mut diffs: Vec<Rational> = (0..=deg as i64)
        .map(|t| {
            let pt: Vec<Rational> = p.iter().zip(v).map(|(a, b)| a + &(b * &q(t))).collect();
            g(&pt)
        })
        .collect();
    let mut out = Rational::zero();
    for k in 1..=deg {
        for j in 0..diffs.len() - 1 {
            diffs[j] = &diffs[j + 1] - &diffs[j];
        }
        diffs.pop();
        let term = &diffs[0] * &qr(1, k as i64);
        if k % 2 == 1 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    out
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()
}

pub fn mat_vec(m: &QMatrix, v: &[Rational]) -> Vec<Rational> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c) * &v[c]).sum())
        .collect()
}

/// `(X·g)(p)` where `X` acts through the derivation `-(∇g)·(M x)`.
pub fn action_at<G>(m: &QMatrix, g: G, deg: usize, p: &[Rational]) -> Rational
where
    G: Fn(&[Rational]) -> Rational,
{
    -directional_derivative(g, deg, p, &mat_vec(m, p))
}

pub fn partial_at<G>(g: G, deg: usize, i: usize, p: &[Rational]) -> Rational
where
    G: Fn(&[Rational]) -> Rational,
{
    directional_derivative(g, deg, p, &unit(p.len(), i))
}

/// Degree bound of `f` for the oracles.
pub fn deg(f: &Poly) -> usize {
    f.total_degree().unwrap_or(0) as usize
}

/// True when `f` agrees with `g` at every sample point.
pub fn agree_at<F, G>(f: F, g: G, points: &[Vec<Rational>]) -> bool
where
    F: Fn(&[Rational]) -> Rational,
    G: Fn(&[Rational]) -> Rational,
{
    points.iter().all(|pt| f(pt) == g(pt))
}
