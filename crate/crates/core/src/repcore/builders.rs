//! Standard representations and constructions on them.

use crate::qlinalg::QMatrix;
use crate::Rational;

use super::{Generator, RepError, RepSpec, Role, Sl2Triple};

/// The irreducible sl₂-module of highest weight `m` on basis `v_0..v_m`:
/// `H v_j = (m-2j) v_j`, `F v_j = v_{j+1}`, `E v_j = j(m-j+1) v_{j-1}`.
pub fn sl2_irrep(m: u32) -> RepSpec {
    let n = m as usize + 1;
    let mut e = QMatrix::zeros(n, n);
    let mut f = QMatrix::zeros(n, n);
    let mut h = QMatrix::zeros(n, n);
    for j in 0..n {
        let ji = j as i64;
        let mi = m as i64;
        h.set(j, j, Rational::from_integer(mi - 2 * ji));
        if j + 1 < n {
            f.set(j + 1, j, Rational::one());
        }
        if j > 0 {
            e.set(j - 1, j, Rational::from_integer(ji * (mi - ji + 1)));
        }
    }
    RepSpec::new(
        n,
        vec![
            Generator { name: "E".into(), role: Role::Raising, matrix: e },
            Generator { name: "F".into(), role: Role::Lowering, matrix: f },
            Generator { name: "H".into(), role: Role::Cartan, matrix: h },
        ],
        vec![Sl2Triple::new("E", "F", "H")],
    )
}

/// Block-diagonal sum. Every summand must list the same generator names and
/// roles in the same order.
pub fn direct_sum(reps: &[RepSpec]) -> Result<RepSpec, RepError> {
    let first = reps.first().ok_or(RepError::EmptySum)?;
    let signature = |r: &RepSpec| -> Vec<(String, Role)> {
        r.generators().iter().map(|g| (g.name.clone(), g.role)).collect()
    };
    let sig = signature(first);
    for (i, r) in reps.iter().enumerate().skip(1) {
        if signature(r) != sig {
            return Err(RepError::GeneratorMismatch { summand: i });
        }
    }
    let generators = sig
        .iter()
        .enumerate()
        .map(|(k, (name, role))| {
            let blocks: Vec<&QMatrix> = reps.iter().map(|r| &r.generators()[k].matrix).collect();
            Generator {
                name: name.clone(),
                role: *role,
                matrix: QMatrix::block_diagonal(&blocks),
            }
        })
        .collect();
    let mut triples: Vec<Sl2Triple> = Vec::new();
    for t in reps.iter().flat_map(|r| r.sl2_triples()) {
        if !triples.contains(t) {
            triples.push(t.clone());
        }
    }
    Ok(RepSpec::new(reps.iter().map(RepSpec::dim).sum(), generators, triples))
}

/// Contragredient representation: every matrix `M` becomes `-Mᵀ`.
pub fn dual_rep(rep: &RepSpec) -> RepSpec {
    let minus_one = -Rational::one();
    let generators = rep
        .generators()
        .iter()
        .map(|g| Generator {
            name: g.name.clone(),
            role: g.role,
            matrix: g.matrix.transpose().scale(&minus_one),
        })
        .collect();
    RepSpec::new(rep.dim(), generators, rep.sl2_triples().to_vec())
}

/// Defining representation of sl_k with Chevalley generators
/// `e_i = E_{i,i+1}`, `f_i = E_{i+1,i}`, `h_i = E_{ii} - E_{i+1,i+1}`.
pub fn sln_standard(k: usize) -> Result<RepSpec, RepError> {
    if k < 2 {
        return Err(RepError::InvalidParameter(format!("sl_k needs k >= 2, got {k}")));
    }
    let unit = |r: usize, c: usize| {
        let mut m = QMatrix::zeros(k, k);
        m.set(r, c, Rational::one());
        m
    };
    let mut generators = Vec::new();
    let mut triples = Vec::new();
    for i in 1..k {
        generators.push(Generator {
            name: format!("e{i}"),
            role: Role::Raising,
            matrix: unit(i - 1, i),
        });
    }
    for i in 1..k {
        generators.push(Generator {
            name: format!("f{i}"),
            role: Role::Lowering,
            matrix: unit(i, i - 1),
        });
    }
    for i in 1..k {
        generators.push(Generator {
            name: format!("h{i}"),
            role: Role::Cartan,
            matrix: unit(i - 1, i - 1).sub(&unit(i, i)),
        });
        triples.push(Sl2Triple::new(&format!("e{i}"), &format!("f{i}"), &format!("h{i}")));
    }
    Ok(RepSpec::new(k, generators, triples))
}

/// `direct_sum` of `sl2_irrep(m)` over the given highest weights.
pub fn sl2_sum(weights: &[u32]) -> Result<RepSpec, RepError> {
    let reps: Vec<RepSpec> = weights.iter().map(|&m| sl2_irrep(m)).collect();
    direct_sum(&reps)
}
