//! Acceptance criteria, one line of output each. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use invjac::jacmod::{
    check_intertwining_phi, check_intertwining_with, check_psi_hom, equivariant_mirror_map,
    jacobian, kempf_witness, quotient_map_check, yau_check, HomCheck, TransposedTensorAction,
};
use invjac::modanalysis::{
    cayley_sylvester, decompose, invariant_basis, invariants, is_invariant_poly, WeightVector,
};
use invjac::polyring::{graded_dimension, GradedPiece, Monomial};
use invjac::qlinalg::{Ambient, Subspace};
use invjac::repcore::{act_on_poly, direct_sum, dual_rep, sl2_irrep, sl2_sum, sln_standard, RepSpec};
use invjac::{parse_poly, Config, Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cfg() -> Config {
    Config::default()
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn poly(text: &str, n: usize) -> Poly {
    parse_poly(text, n).expect("literal polynomial")
}

fn set(ws: &[i64]) -> BTreeSet<WeightVector> {
    ws.iter().map(|&w| WeightVector(vec![w])).collect()
}

fn full_a1(n: usize) -> (GradedPiece, Subspace) {
    let a1 = GradedPiece::new(n, 1, invjac::DEFAULT_DIM_CAP).unwrap();
    let s = Subspace::full(Ambient::of_piece(&a1));
    (a1, s)
}

fn a1_highest_weights(rep: &RepSpec) -> Result<BTreeSet<WeightVector>, String> {
    let (a1, s) = full_a1(rep.dim());
    Ok(ok(decompose(rep, &a1, &s))?.highest_weight_set)
}

/// Brute-force `dim Sym^d(V(m))^{sl2}` from the weight-space multiplicities
/// of `Sym^d`, enumerating exponent vectors directly.
fn enumerated_invariant_count(m: u32, d: u32) -> u128 {
    fn count(j: u32, m: u32, left: u32, w: i64) -> u128 {
        if w < 0 {
            return 0;
        }
        if j == m {
            return u128::from(w == i64::from(m) * i64::from(left));
        }
        (0..=left)
            .map(|a| count(j + 1, m, left - a, w - i64::from(j) * i64::from(a)))
            .sum()
    }
    let md = i64::from(m) * i64::from(d);
    if md % 2 == 1 {
        return 0;
    }
    count(0, m, d, md / 2) - count(0, m, d, md / 2 - 1)
}

fn only_invariant(rep: &RepSpec, d: u32) -> Result<Poly, String> {
    let mut basis = ok(invariant_basis(rep, d, &cfg()))?;
    ensure!(basis.len() == 1, "expected one invariant in degree {d}, found {}", basis.len());
    Ok(basis.remove(0))
}

fn criterion_1() -> Check {
    let reps = [
        ("V(1)", sl2_irrep(1)),
        ("V(2)", sl2_irrep(2)),
        ("V(3)", sl2_irrep(3)),
        ("V(1)+V(1)", sl2_sum(&[1, 1]).unwrap()),
        ("V(2)+V(0)", sl2_sum(&[2, 0]).unwrap()),
        ("sl3", sln_standard(3).unwrap()),
    ];
    let mut parts = Vec::new();
    let mut total = 0usize;
    for (name, rep) in &reps {
        let n = rep.dim();
        let mut d = 0u32;
        while graded_dimension(n, d).unwrap() * n as u128 <= 5000 {
            match ok(check_intertwining_phi(rep, d, &cfg()))? {
                HomCheck::Pass { checked } => total += checked,
                HomCheck::Counterexample(c) => {
                    return Err(format!("{name}, degree {d}: counterexample {c:?}"))
                }
            }
            d += 1;
        }
        parts.push(format!("{name} d<={}", d - 1));
        let control = ok(check_intertwining_with(&TransposedTensorAction::new(rep), 2, &cfg()))?;
        ensure!(!control.passed(), "{name}: corrupted action was not caught");
    }
    Ok(format!(
        "{total} identities exact over {}; corrupted action caught for all",
        parts.join(", ")
    ))
}

fn criterion_2() -> Check {
    let rep = sl2_sum(&[1, 1]).unwrap();
    let f = only_invariant(&rep, 2)?;
    ensure!(f == poly("x1*x4 - x2*x3", 4), "unexpected generator {f}");
    let j = ok(jacobian(&f, &cfg()))?;
    ensure!(j.space.dim() == 4 && j.space == Subspace::full(j.space.ambient()), "J(f) is not A_1");
    let qm = ok(quotient_map_check(&rep, &f, &cfg()))?;
    ensure!(
        qm.is_hom && qm.kernel_dim == 0 && qm.image_dim == 4,
        "quotient map check {qm:?}"
    );
    let j_hw = ok(decompose(&rep, &j.piece, &j.space))?.highest_weight_set;
    let a1_hw = a1_highest_weights(&rep)?;
    ensure!(j_hw == set(&[1]) && a1_hw == set(&[1]), "highest weights {j_hw:?} vs {a1_hw:?}");
    Ok(format!("f = {f}; quotient map: hom, kernel 0, image 4; weights {{(1)}} = {{(1)}}"))
}

fn criterion_3() -> Check {
    let rep = sl2_irrep(3);
    let dim = ok(invariants(&rep, 4, &cfg()))?.dim() as u128;
    let (cs, brute) = (cayley_sylvester(3, 4), enumerated_invariant_count(3, 4));
    ensure!(dim == 1 && cs == 1 && brute == 1, "dim {dim}, formula {cs}, enumeration {brute}");
    let f = only_invariant(&rep, 4)?;
    let r = ok(yau_check(&rep, &f, &cfg()))?;
    ensure!(r.passed(), "yau check failed: {r:?}");
    ensure!(
        r.j_highest_weights == set(&[3]) && r.a1_highest_weights == set(&[3]),
        "highest weights {:?} vs {:?}",
        r.j_highest_weights,
        r.a1_highest_weights
    );
    Ok("dim 1 = Cayley-Sylvester 1 = enumeration 1; {(3)} in {(3)}".into())
}

fn criterion_4() -> Check {
    let rep = sl2_irrep(4);
    for d in [2, 3] {
        let dim = ok(invariants(&rep, d, &cfg()))?.dim() as u128;
        let (cs, brute) = (cayley_sylvester(4, d), enumerated_invariant_count(4, d));
        ensure!(dim == 1 && cs == 1 && brute == 1, "degree {d}: dim {dim}, formula {cs}, enumeration {brute}");
    }
    let i2 = only_invariant(&rep, 2)?;
    let i3 = only_invariant(&rep, 3)?;
    for (label, f) in [("degree 3", i3.clone()), ("degree 5 product", &i2 * &i3)] {
        let r = ok(yau_check(&rep, &f, &cfg()))?;
        ensure!(r.passed(), "{label}: {r:?}");
    }
    Ok("dims 1, 1 match both oracles; yau passes in degrees 3 and 5".into())
}

fn criterion_5() -> Check {
    let mut cases = 0;
    for m in 0..=6u32 {
        for d in 0..=4u32 {
            if graded_dimension(m as usize + 1, d).unwrap() > cfg().dim_cap as u128 {
                continue;
            }
            let dim = ok(invariants(&sl2_irrep(m), d, &cfg()))?.dim() as u128;
            let cs = cayley_sylvester(m, d);
            let brute = enumerated_invariant_count(m, d);
            ensure!(dim == cs && cs == brute, "m={m} d={d}: dim {dim}, formula {cs}, enumeration {brute}");
            cases += 1;
        }
    }
    Ok(format!("{cases} (m, d) pairs agree exactly"))
}

fn criterion_6() -> Check {
    let sl3 = sln_standard(3).unwrap();
    let rep = ok(direct_sum(&[sl3.clone(), dual_rep(&sl3)]))?;
    ensure!(rep.dim() == 6, "dimension {}", rep.dim());
    let inv = ok(invariants(&rep, 2, &cfg()))?;
    let f = poly("x1*x4 + x2*x5 + x3*x6", 6);
    let piece = GradedPiece::new(6, 2, cfg().dim_cap).unwrap();
    ensure!(inv.contains_vector(&ok(piece.coords(&f))?), "f is not among the invariants");
    let qm = ok(quotient_map_check(&rep, &f, &cfg()))?;
    ensure!(qm.is_hom, "quotient map not a homomorphism: {qm:?}");
    let j = ok(jacobian(&f, &cfg()))?;
    ensure!(j.space.dim() == 6, "dim J(f) = {}", j.space.dim());
    Ok(format!("invariants dim {}; f invariant; quotient hom; J(f) = A_1", inv.dim()))
}

fn criterion_7() -> Check {
    let v11 = sl2_sum(&[1, 1]).unwrap();
    let v3 = sl2_irrep(3);
    let v4 = sl2_irrep(4);
    let i2 = only_invariant(&v4, 2)?;
    let i3 = only_invariant(&v4, 3)?;
    let cases = [
        (&v11, only_invariant(&v11, 2)?),
        (&v3, only_invariant(&v3, 4)?),
        (&v4, i3.clone()),
        (&v4, &i2 * &i3),
    ];
    let mut count = 0;
    for (rep, f) in cases {
        for f in [f.clone(), f.scale(&q(5))] {
            let g = ok(kempf_witness(rep, &f, &cfg()))?;
            ensure!(is_invariant_poly(rep, &g), "witness {g} is not invariant");
            let (jf, jg) = (ok(jacobian(&f, &cfg()))?, ok(jacobian(&g, &cfg()))?);
            ensure!(ok(jf.space.equal(&jg.space))?, "J({g}) differs from J({f})");
            count += 1;
        }
    }
    Ok(format!("{count} witnesses invariant with equal Jacobians"))
}

fn criterion_8() -> Check {
    let mut coeffs = Vec::new();
    for m in 0..=4u32 {
        let rep = sl2_irrep(m);
        let map = ok(equivariant_mirror_map(&rep, &cfg()))?;
        let s = &map.summands[0];
        ensure!(s.solution_dim == 1, "V({m}): solution space dimension {}", s.solution_dim);
        ensure!(s.alternates, "V({m}): coefficients do not alternate: {:?}", s.coefficients);
        for d in 0..=4 {
            ensure!(ok(check_psi_hom(&rep, &map, d, &cfg()))?.passed(), "V({m}), degree {d}");
        }
        if m > 0 {
            let flipped = map.with_flipped_sign(0, 0);
            ensure!(
                !ok(check_psi_hom(&rep, &flipped, 2, &cfg()))?.passed(),
                "V({m}): sign-flipped mirror passed"
            );
        }
        let text: Vec<String> = s.coefficients.iter().map(|c| c.to_string()).collect();
        coeffs.push(format!("V({m}): ({})", text.join(", ")));
    }
    Ok(format!("{}; flipped signs caught", coeffs.join("; ")))
}

fn random_poly<R: Rng>(rng: &mut R, n: usize, d: u32) -> Poly {
    let terms = rng.gen_range(1..=6);
    Poly::from_terms(
        n,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            let c = Rational::from_ratio(rng.gen_range(-30..=30), rng.gen_range(1..=7)).unwrap();
            (Monomial::from_exponents(&e), c)
        }),
    )
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cases = 1000;
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(0..=6);
        let f = random_poly(&mut rng, n, d);
        let mut euler = Poly::zero(n);
        for i in 0..n {
            euler = &euler + &(&Poly::var(n, i) * &ok(f.partial(i))?);
        }
        ensure!(euler == f.scale(&q(d as i64)), "Euler identity fails for {f}");
    }
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let (d1, d2) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let f = random_poly(&mut rng, n, d1);
        let g = random_poly(&mut rng, n, d2);
        let i = rng.gen_range(0..n);
        let lhs = ok((&f * &g).partial(i))?;
        let rhs = &(&ok(f.partial(i))? * &g) + &(&f * &ok(g.partial(i))?);
        ensure!(lhs == rhs, "Leibniz fails for {f}, {g}, x{}", i + 1);
    }
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(0..=6);
        let f = random_poly(&mut rng, n, d);
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let a = ok(ok(f.partial(i))?.partial(j))?;
        let b = ok(ok(f.partial(j))?.partial(i))?;
        ensure!(a == b, "mixed partials differ for {f}");
    }
    let reps: Vec<RepSpec> = vec![
        sl2_irrep(1),
        sl2_irrep(2),
        sl2_irrep(3),
        sl2_irrep(4),
        sl2_sum(&[1, 1]).unwrap(),
        sl2_sum(&[2, 0, 1]).unwrap(),
        sln_standard(3).unwrap(),
    ];
    for _ in 0..cases {
        let rep = &reps[rng.gen_range(0..reps.len())];
        let d = rng.gen_range(0..=4);
        let f = random_poly(&mut rng, rep.dim(), d);
        let t = &rep.sl2_triples()[rng.gen_range(0..rep.sl2_triples().len())];
        let act = |x: &str, h: &Poly| act_on_poly(rep, x, h).expect("generator exists");
        let (e, fl, h) = (t.raising.as_str(), t.lowering.as_str(), t.cartan.as_str());
        ensure!(
            &act(e, &act(fl, &f)) - &act(fl, &act(e, &f)) == act(h, &f),
            "[E,F] = H fails on {f}"
        );
        ensure!(
            &act(h, &act(e, &f)) - &act(e, &act(h, &f)) == act(e, &f).scale(&q(2)),
            "[H,E] = 2E fails on {f}"
        );
        ensure!(
            &act(h, &act(fl, &f)) - &act(fl, &act(h, &f)) == act(fl, &f).scale(&q(-2)),
            "[H,F] = -2F fails on {f}"
        );
    }
    Ok(format!("{cases} cases each: Euler, Leibniz, mixed partials, sl2 brackets on A"))
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_invjac"))
        .args(args)
        .current_dir(data_dir())
        .env_remove("INVJAC_DIM_CAP")
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("terminated by signal")?;
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let report: serde_json::Value =
        serde_json::from_str(&stdout).map_err(|e| format!("{args:?}: malformed report: {e}"))?;
    ensure!(report["schema_version"] == 1, "{args:?}: missing schema version");
    Ok((code, stdout))
}

/// Everything before the timing block, which is last by construction.
fn without_timings(report: &str) -> &str {
    &report[..report.rfind("\"timings\"").unwrap_or(report.len())]
}

fn criterion_10() -> Check {
    let invocations: [(&[&str], i32); 3] = [
        (&["yau", "--sl2-rep", "3", "--poly", "@invariant_quartic.txt"], 0),
        (&["yau", "--sl2-rep", "1,1", "--poly", "x1*x4 - x2*x3"], 2),
        (&["fuzz", "--seed", "1", "--trials", "10", "--max-m", "3", "--max-d", "4"], 0),
    ];
    let mut codes = Vec::new();
    for (args, expected) in invocations {
        let (code, first) = run_cli(args)?;
        ensure!(code == expected, "{args:?}: exit {code}, expected {expected}");
        let (_, second) = run_cli(args)?;
        ensure!(
            without_timings(&first) == without_timings(&second),
            "{args:?}: reports differ between runs"
        );
        codes.push(code.to_string());
    }
    let (_, degree_gate) = run_cli(invocations[1].0)?;
    ensure!(degree_gate.contains("degree ≤ 2"), "degree gate message missing");
    Ok(format!("exit codes {}; reports byte-identical across runs", codes.join("/")))
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("intertwining of f⊗e_i -> ∂f/∂x_i", criterion_1),
        ("determinant example", criterion_2),
        ("binary cubic", criterion_3),
        ("binary quartic", criterion_4),
        ("Cayley-Sylvester sweep", criterion_5),
        ("sl3 plus its dual", criterion_6),
        ("Kempf witnesses", criterion_7),
        ("mirror map", criterion_8),
        ("foundation identities", criterion_9),
        ("CLI contract", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
