use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::modanalysis::{invariant_basis, is_invariant_poly};
use crate::polyring::{graded_dimension, Poly, Rational};
use crate::repcore::sl2_sum;
use crate::Config;

use super::{
    check_intertwining_with, jacobian, kempf_witness, quotient_map_check, yau_check,
    TransposedTensorAction,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzOptions {
    pub seed: u64,
    pub trials: usize,
    pub max_m: u32,
    pub max_d: u32,
    /// Run the intertwining check against [`TransposedTensorAction`]; used
    /// to confirm the harness reports failures.
    pub corrupt_action: bool,
}

impl Default for FuzzOptions {
    fn default() -> Self {
        FuzzOptions {
            seed: 1,
            trials: 10,
            max_m: 3,
            max_d: 4,
            corrupt_action: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub summands: Vec<u32>,
    pub degree: u32,
    pub invariant: Option<Poly>,
    pub checks: Vec<(String, CheckOutcome)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub trials: Vec<TrialRecord>,
}

impl FuzzSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Largest representation dimension the harness draws.
const MAX_DIM: usize = 8;

/// Runs random trials over direct sums of sl₂ irreducibles. Each trial is
/// seeded from `(seed, index)` alone, so the summary does not depend on
/// execution order.
pub fn fuzz_harness(opts: &FuzzOptions, cfg: &Config) -> FuzzSummary {
    let trials: Vec<TrialRecord> = (0..opts.trials)
        .into_par_iter()
        .map(|i| run_trial(opts, cfg, i))
        .collect();
    let mut summary = FuzzSummary {
        seed: opts.seed,
        ..FuzzSummary::default()
    };
    for t in &trials {
        for (_, c) in &t.checks {
            match c {
                CheckOutcome::Pass => summary.passed += 1,
                CheckOutcome::Fail(_) => summary.failed += 1,
                CheckOutcome::Skipped(_) => summary.skipped += 1,
            }
        }
    }
    summary.trials = trials;
    summary
}

fn run_trial(opts: &FuzzOptions, cfg: &Config, index: usize) -> TrialRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(index as u64);

    let mut summands = Vec::new();
    let mut dim = 0;
    let count = rng.gen_range(1..=3);
    for _ in 0..count {
        let m = rng.gen_range(0..=opts.max_m);
        if dim + m as usize + 1 > MAX_DIM && !summands.is_empty() {
            break;
        }
        dim += m as usize + 1;
        summands.push(m);
    }
    let mut degree = rng.gen_range(1..=opts.max_d.max(1));
    while degree > 1 && graded_dimension(dim, degree).is_none_or(|v| v > cfg.dim_cap as u128) {
        degree -= 1;
    }
    let mut record = TrialRecord {
        index,
        summands: summands.clone(),
        degree,
        invariant: None,
        checks: Vec::new(),
    };
    let rep = sl2_sum(&summands).expect("builder summands share generators");

    let hom = if opts.corrupt_action {
        check_intertwining_with(&TransposedTensorAction::new(&rep), degree, cfg)
    } else {
        check_intertwining_with(&rep, degree, cfg)
    };
    record.checks.push((
        "intertwining".into(),
        match hom {
            Ok(h) if h.passed() => CheckOutcome::Pass,
            Ok(h) => CheckOutcome::Fail(format!("{h:?}")),
            Err(e) => CheckOutcome::Fail(e.to_string()),
        },
    ));

    let basis = match invariant_basis(&rep, degree, cfg) {
        Ok(b) => b,
        Err(e) => {
            record.checks.push(("invariants".into(), CheckOutcome::Fail(e.to_string())));
            return record;
        }
    };
    if basis.is_empty() {
        for name in ["quotient", "yau", "kempf"] {
            record
                .checks
                .push((name.into(), CheckOutcome::Skipped("no invariants".into())));
        }
        return record;
    }
    let mut f = Poly::zero(dim);
    while f.is_zero() {
        for b in &basis {
            f.add_scaled(b, &Rational::from_integer(rng.gen_range(-3..=3)));
        }
    }
    record.invariant = Some(f.clone());
    let verdict = |ok: bool, what: &str| {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail(what.to_string())
        }
    };

    let quotient = match quotient_map_check(&rep, &f, cfg) {
        Ok(q) => verdict(q.is_hom && q.kernel_dim + q.image_dim == dim, "quotient map not equivariant"),
        Err(e) => CheckOutcome::Fail(e.to_string()),
    };
    record.checks.push(("quotient".into(), quotient));

    let yau = if degree <= 2 {
        CheckOutcome::Skipped("degree <= 2".into())
    } else {
        match yau_check(&rep, &f, cfg) {
            Ok(r) => verdict(r.passed(), "highest weights not contained or quotient failed"),
            Err(e) => CheckOutcome::Fail(e.to_string()),
        }
    };
    record.checks.push(("yau".into(), yau));

    let kempf = match kempf_witness(&rep, &f, cfg) {
        Ok(g) => {
            let same = jacobian(&g, cfg)
                .and_then(|jg| {
                    let jf = jacobian(&f, cfg)?;
                    Ok(jg.space.equal(&jf.space)?)
                })
                .unwrap_or(false);
            verdict(same && is_invariant_poly(&rep, &g), "witness has a different Jacobian")
        }
        Err(e) => CheckOutcome::Fail(e.to_string()),
    };
    record.checks.push(("kempf".into(), kempf));
    record
}
