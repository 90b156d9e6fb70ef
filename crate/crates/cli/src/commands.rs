use std::fmt::Write as _;
use std::path::Path;

use invjac::jacmod::{
    check_intertwining_phi, check_psi_hom, equivariant_mirror_map, fuzz_harness, jacobian,
    kempf_witness, yau_check, Counterexample, FuzzOptions, HomCheck, JacError,
};
use invjac::modanalysis::{
    cayley_sylvester, decompose, invariant_basis, is_invariant_poly, AnalysisError,
    DecompositionReport,
};
use invjac::polyring::{graded_dimension, GradedPiece, PolyError};
use invjac::qlinalg::{Ambient, LinalgError, Subspace};
use invjac::repcore::{sl2_sum, sln_standard};
use invjac::repfile::parse_rep_json;
use invjac::{parse_poly, Config, Poly, RepSpec};
use serde_json::{json, Value};

use crate::args::{Command, RepArgs};
use crate::report::{ErrorInfo, Verdict};

/// Environment variable overriding the graded-piece dimension cap.
pub const DIM_CAP_VAR: &str = "INVJAC_DIM_CAP";

/// Builders are dense; keep `n × n` matrices small.
pub const MAX_REP_DIM: usize = 512;

pub struct Outcome {
    pub inputs: Value,
    pub verdict: Verdict,
    pub result: Option<Value>,
    pub error: Option<ErrorInfo>,
    pub summary: String,
}

struct Done {
    verdict: Verdict,
    result: Value,
    summary: String,
}

struct Failure {
    verdict: Verdict,
    info: ErrorInfo,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            verdict: Verdict::Error,
            info: ErrorInfo {
                kind: "input",
                message: message.into(),
                witness: None,
            },
        }
    }
}

impl From<JacError> for Failure {
    fn from(e: JacError) -> Self {
        let message = e.to_string();
        let (verdict, kind, witness) = match &e {
            JacError::DegreeHypothesis { .. } => (Verdict::Error, "precondition", None),
            JacError::JacobianNotInvariant { generator, element } => (
                Verdict::Error,
                "precondition",
                Some(json!({"generator": generator, "element": element})),
            ),
            JacError::Analysis(AnalysisError::NotInvariant { generator, element }) => (
                Verdict::Error,
                "precondition",
                Some(json!({"generator": generator, "element": element})),
            ),
            JacError::KempfNotFound { .. }
            | JacError::MirrorNoneExists { .. }
            | JacError::MirrorNotUnique { .. }
            | JacError::Analysis(AnalysisError::AuditFailure { .. }) => {
                (Verdict::Fail, "check_failed", None)
            }
            e if is_cap(e) => (Verdict::Error, "dimension_cap", None),
            _ => (Verdict::Error, "input", None),
        };
        Failure {
            verdict,
            info: ErrorInfo {
                kind,
                message,
                witness,
            },
        }
    }
}

fn is_cap(e: &JacError) -> bool {
    matches!(
        e,
        JacError::Poly(PolyError::DimensionCap { .. })
            | JacError::Analysis(AnalysisError::Poly(PolyError::DimensionCap { .. }))
            | JacError::Linalg(LinalgError::Poly(PolyError::DimensionCap { .. }))
            | JacError::Analysis(AnalysisError::Linalg(LinalgError::Poly(
                PolyError::DimensionCap { .. }
            )))
    )
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        JacError::from(e).into()
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        JacError::from(e).into()
    }
}

pub fn run(cmd: &Command) -> Outcome {
    let inputs = echo_inputs(cmd);
    match execute(cmd) {
        Ok(done) => Outcome {
            inputs,
            verdict: done.verdict,
            result: Some(done.result),
            error: None,
            summary: done.summary,
        },
        Err(f) => Outcome {
            inputs,
            verdict: f.verdict,
            result: None,
            error: Some(f.info),
            summary: String::new(),
        },
    }
}

fn echo_rep(rep: &RepArgs) -> Value {
    if let Some(p) = &rep.rep {
        json!({"file": p.display().to_string()})
    } else if let Some(ms) = &rep.sl2_rep {
        json!({"sl2_rep": ms})
    } else {
        json!({"sln": rep.sln})
    }
}

fn echo_inputs(cmd: &Command) -> Value {
    match cmd {
        Command::VerifyHom { rep, degree } | Command::Invariants { rep, degree } => {
            json!({"rep": echo_rep(rep), "degree": degree})
        }
        Command::Yau { rep, poly } | Command::Kempf { rep, poly } => {
            json!({"rep": echo_rep(rep), "poly": poly})
        }
        Command::Decompose {
            rep,
            degree,
            subspace_from_jacobian,
        } => json!({
            "rep": echo_rep(rep),
            "degree": degree,
            "subspace_from_jacobian": subspace_from_jacobian,
        }),
        Command::Mirror { rep, max_degree } => {
            json!({"rep": echo_rep(rep), "max_degree": max_degree})
        }
        Command::Fuzz {
            seed,
            trials,
            max_m,
            max_d,
            corrupt_action,
        } => json!({
            "seed": seed,
            "trials": trials,
            "max_m": max_m,
            "max_d": max_d,
            "corrupt_action": corrupt_action,
        }),
    }
}

fn config() -> Result<Config, Failure> {
    let mut cfg = Config::default();
    if let Ok(raw) = std::env::var(DIM_CAP_VAR) {
        cfg.dim_cap = raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| Failure::input(format!("{DIM_CAP_VAR} must be a positive integer, got {raw:?}")))?;
    }
    Ok(cfg)
}

fn load_rep(args: &RepArgs) -> Result<RepSpec, Failure> {
    let rep = if let Some(path) = &args.rep {
        let text = read_file(path)?;
        parse_rep_json(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    } else if let Some(ms) = &args.sl2_rep {
        let n: u64 = ms.iter().map(|&m| m as u64 + 1).sum();
        if n > MAX_REP_DIM as u64 {
            return Err(Failure::input(format!(
                "representation dimension {n} exceeds the limit {MAX_REP_DIM}"
            )));
        }
        sl2_sum(ms).map_err(|e| Failure::input(e.to_string()))?
    } else {
        let k = args.sln.expect("clap requires one representation source");
        if k > MAX_REP_DIM {
            return Err(Failure::input(format!(
                "representation dimension {k} exceeds the limit {MAX_REP_DIM}"
            )));
        }
        sln_standard(k).map_err(|e| Failure::input(e.to_string()))?
    };
    if rep.dim() > MAX_REP_DIM {
        return Err(Failure::input(format!(
            "representation dimension {} exceeds the limit {MAX_REP_DIM}",
            rep.dim()
        )));
    }
    Ok(rep)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_poly(arg: &str, n: usize) -> Result<Poly, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_file(Path::new(path))?,
        None => arg.to_string(),
    };
    parse_poly(text.trim(), n).map_err(|e| Failure::input(format!("polynomial: {e}")))
}

fn weights_text<'a>(ws: impl IntoIterator<Item = &'a invjac::modanalysis::WeightVector>) -> String {
    let items: Vec<String> = ws.into_iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn counterexample_json(c: &Counterexample) -> Value {
    json!({
        "generator": c.generator,
        "monomial": c.monomial,
        "basis_vector": format!("e{}", c.index + 1),
        "lhs": c.lhs,
        "rhs": c.rhs,
    })
}

fn hom_json(h: &HomCheck) -> Value {
    match h {
        HomCheck::Pass { checked } => json!({"verdict": "pass", "checked": checked}),
        HomCheck::Counterexample(c) => {
            json!({"verdict": "counterexample", "counterexample": counterexample_json(c)})
        }
    }
}

fn hom_text(h: &HomCheck, what: &str) -> String {
    match h {
        HomCheck::Pass { checked } => format!("{checked} identities checked"),
        HomCheck::Counterexample(c) => format!(
            "counterexample: {} on {} ⊗ {}{}: {} ≠ {}",
            c.generator,
            c.monomial,
            what,
            c.index + 1,
            c.lhs,
            c.rhs
        ),
    }
}

fn execute(cmd: &Command) -> Result<Done, Failure> {
    let cfg = config()?;
    match cmd {
        Command::VerifyHom { rep, degree } => {
            let rep = load_rep(rep)?;
            let check = check_intertwining_phi(&rep, *degree, &cfg)?;
            let tensor_dim = graded_dimension(rep.dim(), *degree).unwrap_or(0) * rep.dim() as u128;
            Ok(Done {
                verdict: if check.passed() { Verdict::Pass } else { Verdict::Fail },
                summary: format!("A_{degree} ⊗ V (dimension {tensor_dim}): {}", hom_text(&check, "e")),
                result: json!({
                    "degree": degree,
                    "tensor_dim": tensor_dim.to_string(),
                    "check": hom_json(&check),
                }),
            })
        }
        Command::Invariants { rep: args, degree } => {
            let rep = load_rep(args)?;
            let basis = invariant_basis(&rep, *degree, &cfg)?;
            let mut result = json!({
                "degree": degree,
                "dim": basis.len(),
                "basis": basis,
            });
            let mut summary = format!("dim = {}\n", basis.len());
            for b in &basis {
                let _ = writeln!(summary, "  {b}");
            }
            if let Some([m]) = args.sl2_rep.as_deref() {
                let count = cayley_sylvester(*m, *degree);
                result["cayley_sylvester"] = json!(count.to_string());
                let _ = writeln!(summary, "Cayley–Sylvester count: {count}");
            }
            Ok(Done {
                verdict: Verdict::Pass,
                result,
                summary,
            })
        }
        Command::Yau { rep, poly } => {
            let rep = load_rep(rep)?;
            let f = load_poly(poly, rep.dim())?;
            let report = yau_check(&rep, &f, &cfg)?;
            let summary = format!(
                "J(f) highest weights {} ⊆ A_1 highest weights {}: {}\nquotient map from {}: {}",
                weights_text(&report.j_highest_weights),
                weights_text(&report.a1_highest_weights),
                report.subset_holds,
                report.quotient_source,
                report.quotient_hom,
            );
            let mut result = serde_json::to_value(&report).expect("report serializes");
            result["poly"] = json!(f);
            Ok(Done {
                verdict: if report.passed() { Verdict::Pass } else { Verdict::Fail },
                result,
                summary,
            })
        }
        Command::Kempf { rep, poly } => {
            let rep = load_rep(rep)?;
            let f = load_poly(poly, rep.dim())?;
            let g = kempf_witness(&rep, &f, &cfg)?;
            let jf = jacobian(&f, &cfg)?;
            let jg = jacobian(&g, &cfg)?;
            let equal = jf.space.equal(&jg.space).map_err(|e| Failure::from(JacError::from(e)))?;
            let invariant = is_invariant_poly(&rep, &g);
            Ok(Done {
                verdict: if equal && invariant { Verdict::Pass } else { Verdict::Fail },
                summary: format!("witness: {g}\nJ(g) = J(f): {equal}, g invariant: {invariant}"),
                result: json!({
                    "poly": f,
                    "witness": g,
                    "jacobian_dim": jf.space.dim(),
                    "jacobians_equal": equal,
                    "witness_invariant": invariant,
                }),
            })
        }
        Command::Decompose {
            rep,
            degree,
            subspace_from_jacobian,
        } => {
            let rep = load_rep(rep)?;
            let (label, piece, space) = match (degree, subspace_from_jacobian) {
                (_, Some(text)) => {
                    let f = load_poly(text, rep.dim())?;
                    let jac = jacobian(&f, &cfg)?;
                    (format!("J({f})"), jac.piece, jac.space)
                }
                (Some(d), None) => {
                    let piece = GradedPiece::new(rep.dim(), *d, cfg.dim_cap)?;
                    let full = Subspace::full(Ambient::of_piece(&piece));
                    (format!("A_{d}"), piece, full)
                }
                (None, None) => unreachable!("clap requires a degree or a polynomial"),
            };
            let report: DecompositionReport = decompose(&rep, &piece, &space)?;
            let mut summary = format!(
                "{label}: dimension {}, highest weights {}\n",
                report.total_dim,
                weights_text(&report.highest_weight_set)
            );
            for s in &report.summands {
                let _ = writeln!(
                    summary,
                    "  {} generated by {} (dimension {})",
                    s.highest_weight, s.hwv_poly, s.generated_dim
                );
            }
            Ok(Done {
                verdict: Verdict::Pass,
                summary,
                result: json!({
                    "subspace": label,
                    "degree": piece.degree(),
                    "decomposition": report,
                }),
            })
        }
        Command::Mirror { rep, max_degree } => {
            let rep = load_rep(rep)?;
            let map = equivariant_mirror_map(&rep, &cfg)?;
            let mut checks = Vec::new();
            let mut summary = String::new();
            let mut ok = map.summands.iter().all(|s| s.alternates);
            for s in &map.summands {
                let coefs: Vec<String> = s.coefficients.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(
                    summary,
                    "V({}) at x{}: coefficients ({}), alternating: {}",
                    s.highest_weight,
                    s.offset + 1,
                    coefs.join(", "),
                    s.alternates
                );
            }
            for d in 0..=*max_degree {
                let check = check_psi_hom(&rep, &map, d, &cfg)?;
                ok &= check.passed();
                let _ = writeln!(summary, "degree {d}: {}", hom_text(&check, "x"));
                checks.push(json!({"degree": d, "check": hom_json(&check)}));
            }
            Ok(Done {
                verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                summary,
                result: json!({"mirror": map, "checks": checks}),
            })
        }
        Command::Fuzz {
            seed,
            trials,
            max_m,
            max_d,
            corrupt_action,
        } => {
            let opts = FuzzOptions {
                seed: *seed,
                trials: *trials,
                max_m: *max_m,
                max_d: *max_d,
                corrupt_action: *corrupt_action,
            };
            let summary = fuzz_harness(&opts, &cfg);
            Ok(Done {
                verdict: if summary.all_passed() { Verdict::Pass } else { Verdict::Fail },
                summary: format!(
                    "{} trials: {} passed, {} failed, {} skipped",
                    summary.trials.len(),
                    summary.passed,
                    summary.failed,
                    summary.skipped
                ),
                result: serde_json::to_value(&summary).expect("summary serializes"),
            })
        }
    }
}
