mod common;

use common::*;
use invjac::jacmod::*;
use invjac::modanalysis::{invariant_basis, is_invariant_poly, WeightVector};
use invjac::polyring::GradedPiece;
use invjac::qlinalg::{Ambient, QMatrix, Subspace};
use invjac::repcore::{
    sl2_irrep, sl2_sum, Generator, RepSpec, Role, Sl2Triple, TensorElement,
};
use invjac::{Config, Poly, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg() -> Config {
    Config::default()
}

fn weights(ws: &[i64]) -> std::collections::BTreeSet<WeightVector> {
    ws.iter().map(|&w| WeightVector(vec![w])).collect()
}

fn quartic() -> Poly {
    let basis = invariant_basis(&sl2_irrep(3), 4, &cfg()).unwrap();
    assert_eq!(basis.len(), 1);
    basis[0].clone()
}

#[test]
fn jacobian_examples() {
    let det = p("x1*x4 - x2*x3", 4);
    let j = jacobian_subspace(&det, &cfg()).unwrap();
    assert_eq!(j.dim(), 4);
    assert_eq!(j, Subspace::full(j.ambient()));

    for d in 1..=6 {
        let f = Poly::term(invjac::Monomial::from_exponents(&[d, 0]), q(1));
        let j = jacobian(&f, &cfg()).unwrap();
        assert_eq!(j.space.dim(), 1);
        let below = GradedPiece::new(2, d - 1, 100).unwrap();
        let expected = Subspace::span_polys(&below, &[Poly::term(
            invjac::Monomial::from_exponents(&[d - 1, 0]),
            q(1),
        )])
        .unwrap();
        assert!(j.space.equal(&expected).unwrap());
    }

    let j = jacobian(&p("x1", 2), &cfg()).unwrap();
    assert_eq!(j.piece.degree(), 0);
    assert_eq!(j.space.dim(), 1);

    assert!(matches!(jacobian(&Poly::zero(2), &cfg()), Err(JacError::ZeroPolynomial)));
    assert!(matches!(jacobian(&p("x1 + x2^2", 2), &cfg()), Err(JacError::NotHomogeneous)));
}

#[test]
fn jacobian_spans_gradients_at_points() {
    // Every partial of f lies in J(f) and J(f) has no room for more.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = random_homogeneous(&mut rng, 3, 4, 6);
    let j = jacobian(&f, &cfg()).unwrap();
    let pts: Vec<_> = (0..5).map(|_| random_point(&mut rng, 3)).collect();
    for (i, d) in j.partials.iter().enumerate() {
        assert!(agree_at(|x| d.eval(x), |x| partial_at(|y| f.eval(y), 4, i, x), &pts));
        assert!(j.space.contains_vector(&j.piece.coords(d).unwrap()));
    }
    assert!(j.space.dim() <= 3);
}

#[test]
fn phi_examples() {
    let t = TensorElement::pure(p("x1^2", 2), 0);
    assert_eq!(phi(&t).unwrap(), p("2*x1", 2));
    assert!(phi(&TensorElement::zero(3)).unwrap().is_zero());
    let det = p("x1*x4 - x2*x3", 4);
    let mut t = TensorElement::pure(det.clone(), 0);
    t.add(3, &det);
    assert_eq!(phi(&t).unwrap(), p("x4 + x1", 4));

    let mut bad = TensorElement::pure(p("x1^2", 2), 0);
    bad.add(1, &p("x1", 2));
    assert!(matches!(phi(&bad), Err(JacError::DegreeMismatch)));
}

#[test]
fn intertwining_examples() {
    assert!(check_intertwining_phi(&sl2_irrep(1), 1, &cfg()).unwrap().passed());
    assert!(check_intertwining_phi(&sl2_sum(&[1, 2]).unwrap(), 3, &cfg()).unwrap().passed());
    assert!(check_intertwining_phi(&sl2_irrep(3), 0, &cfg()).unwrap().passed());
}

#[test]
fn intertwining_holds_for_matrices_breaking_the_brackets() {
    let base = sl2_irrep(2);
    let mut gens = base.generators().to_vec();
    gens[0].matrix.set(0, 0, q(5));
    gens[0].matrix.set(2, 1, qr(-3, 7));
    let broken = RepSpec::new(3, gens, base.sl2_triples().to_vec());
    assert!(broken.validate().is_err());
    for d in 0..=4 {
        assert!(check_intertwining_phi(&broken, d, &cfg()).unwrap().passed());
    }
}

#[test]
fn intertwining_against_the_point_oracle() {
    // phi(X·(f⊗e_i)) = ∂_i(X·f) + Σ_j M_ji ∂_j f and X·phi(f⊗e_i) = X·∂_i f,
    // both evaluated from values of f alone.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let rep = sl2_sum(&[2, 1]).unwrap();
    let n = rep.dim();
    for _ in 0..10 {
        let f = random_homogeneous(&mut rng, n, 3, 5);
        let pt = random_point(&mut rng, n);
        let fe = |x: &[Rational]| f.eval(x);
        for g in rep.generators() {
            let m = &g.matrix;
            for i in 0..n {
                let xf = |x: &[Rational]| action_at(m, fe, 3, x);
                let mut lhs = partial_at(xf, 3, i, &pt);
                for j in 0..n {
                    lhs += &(m.get(j, i) * &partial_at(fe, 3, j, &pt));
                }
                let di = |x: &[Rational]| partial_at(fe, 3, i, x);
                let rhs = action_at(m, di, 2, &pt);
                assert_eq!(lhs, rhs);

                let t = TensorElement::pure(f.clone(), i);
                let library = phi(&invjac::repcore::act_on_tensor(&rep, &g.name, &t).unwrap()).unwrap();
                assert_eq!(library.eval(&pt), lhs);
            }
        }
    }
}

#[test]
fn transposed_action_is_caught() {
    for rep in [sl2_irrep(1), sl2_sum(&[2, 0]).unwrap()] {
        let bad = TransposedTensorAction::new(&rep);
        match check_intertwining_with(&bad, 2, &cfg()).unwrap() {
            HomCheck::Counterexample(c) => assert_ne!(c.lhs, c.rhs),
            HomCheck::Pass { .. } => panic!("corrupted action passed"),
        }
    }
}

#[test]
fn quotient_map_examples() {
    let v11 = sl2_sum(&[1, 1]).unwrap();
    let q1 = quotient_map_check(&v11, &p("x1*x4 - x2*x3", 4), &cfg()).unwrap();
    assert!(q1.is_hom);
    assert_eq!((q1.kernel_dim, q1.image_dim), (0, 4));

    let trivial = sl2_sum(&[0, 0]).unwrap();
    for text in ["x1^3 - 7*x1*x2^2", "x2", "x1^2*x2^2 + 1/3*x2^4"] {
        let r = quotient_map_check(&trivial, &p(text, 2), &cfg()).unwrap();
        assert!(r.is_hom);
        assert_eq!(r.kernel_dim + r.image_dim, 2);
    }

    let r = quotient_map_check(&sl2_irrep(1), &p("x1^3", 2), &cfg()).unwrap();
    assert!(!r.is_hom);
    assert_eq!(r.failure.as_ref().map(|f| f.0.as_str()), Some("E"));
}

#[test]
fn invariants_give_quotient_maps_and_invariant_jacobians() {
    for (rep, d) in [
        (sl2_irrep(3), 4),
        (sl2_irrep(4), 3),
        (sl2_sum(&[2, 2]).unwrap(), 2),
        (sl2_sum(&[1, 1, 0]).unwrap(), 3),
    ] {
        for f in invariant_basis(&rep, d, &cfg()).unwrap() {
            let r = quotient_map_check(&rep, &f, &cfg()).unwrap();
            assert!(r.is_hom);
            assert_eq!(r.kernel_dim + r.image_dim, rep.dim());
            let j = jacobian(&f, &cfg()).unwrap();
            assert_eq!(r.image_dim, j.space.dim());
            assert!(invjac::modanalysis::is_invariant_subspace(&rep, &j.piece, &j.space)
                .unwrap()
                .holds());
        }
    }
}

#[test]
fn yau_examples() {
    let r = yau_check(&sl2_irrep(3), &quartic(), &cfg()).unwrap();
    assert!(r.subset_holds && r.passed());
    assert_eq!(r.j_highest_weights, weights(&[3]));
    assert_eq!(r.a1_highest_weights, weights(&[3]));
    assert_eq!(r.quotient_kernel_dim, 0);

    let err = yau_check(&sl2_sum(&[1, 1]).unwrap(), &p("x1*x4 - x2*x3", 4), &cfg()).unwrap_err();
    assert!(matches!(err, JacError::DegreeHypothesis { degree: 2 }));
    assert!(err.to_string().contains("degree ≤ 2"));

    match yau_check(&sl2_irrep(1), &p("x1^3", 2), &cfg()).unwrap_err() {
        JacError::JacobianNotInvariant { generator, .. } => assert_eq!(generator, "E"),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn yau_on_the_quartic_invariants() {
    let rep = sl2_irrep(4);
    let i2 = invariant_basis(&rep, 2, &cfg()).unwrap().remove(0);
    let i3 = invariant_basis(&rep, 3, &cfg()).unwrap().remove(0);
    let r = yau_check(&rep, &i3, &cfg()).unwrap();
    assert!(r.passed());
    let r = yau_check(&rep, &(&i2 * &i3), &cfg()).unwrap();
    assert!(r.passed());
    assert_eq!(r.f_degree, 5);
}

#[test]
fn missing_witness_is_reported() {
    // A lone cartan generator on Q^1 is not semisimple: J(x1^3) = span{x1^2}
    // is invariant, but no cubic is.
    let gens = vec![Generator {
        name: "H".into(),
        role: Role::Cartan,
        matrix: QMatrix::from_i64(&[&[1]]),
    }];
    let rep = RepSpec::validated(1, gens, vec![]).unwrap();
    let f = p("x1^3", 1);
    assert!(!is_invariant_poly(&rep, &f));
    assert!(matches!(kempf_witness(&rep, &f, &cfg()), Err(JacError::KempfNotFound { .. })));
    assert!(matches!(yau_check(&rep, &f, &cfg()), Err(JacError::KempfNotFound { .. })));
}

#[test]
fn yau_verdicts_ignore_scaling() {
    let f = quartic();
    let base = yau_check(&sl2_irrep(3), &f, &cfg()).unwrap();
    for c in [qr(5, 1), qr(-2, 3), qr(1, 1000)] {
        let r = yau_check(&sl2_irrep(3), &f.scale(&c), &cfg()).unwrap();
        assert_eq!(r.subset_holds, base.subset_holds);
        assert_eq!(r.j_highest_weights, base.j_highest_weights);
        assert_eq!(r.quotient_hom, base.quotient_hom);
    }
}

#[test]
fn kempf_examples() {
    let v11 = sl2_sum(&[1, 1]).unwrap();
    let det = p("x1*x4 - x2*x3", 4);
    for f in [det.clone(), det.scale(&q(5))] {
        let g = kempf_witness(&v11, &f, &cfg()).unwrap();
        assert_eq!(g, det);
    }
    let f = quartic();
    let g = kempf_witness(&sl2_irrep(3), &f, &cfg()).unwrap();
    assert_eq!(g, f.monic());
    let jf = jacobian_subspace(&f, &cfg()).unwrap();
    assert!(jf.equal(&jacobian_subspace(&g, &cfg()).unwrap()).unwrap());

    assert!(matches!(
        kempf_witness(&sl2_irrep(1), &p("x1^3", 2), &cfg()),
        Err(JacError::JacobianNotInvariant { .. })
    ));
}

#[test]
fn kempf_picks_the_right_member_of_a_pencil() {
    // Two independent quadratic invariants; only combinations with full
    // Jacobian qualify for f = q1 + q2.
    let rep = sl2_sum(&[1, 1, 1, 1]).unwrap();
    let f = p("x1*x4 - x2*x3 + x5*x8 - x6*x7", 8);
    assert!(is_invariant_poly(&rep, &f));
    let g = kempf_witness(&rep, &f, &cfg()).unwrap();
    assert!(is_invariant_poly(&rep, &g));
    assert!(jacobian_subspace(&g, &cfg())
        .unwrap()
        .equal(&jacobian_subspace(&f, &cfg()).unwrap())
        .unwrap());
}

#[test]
fn mirror_examples() {
    let m = equivariant_mirror_map(&sl2_irrep(1), &cfg()).unwrap();
    assert_eq!(m.summands.len(), 1);
    assert_eq!(m.summands[0].coefficients, vec![q(1), q(-1)]);
    assert!(m.summands[0].alternates);
    // ψ(f⊗x1) = ∂f/∂x2 and ψ(f⊗x2) = -∂f/∂x1.
    let f = p("x1^2*x2", 2);
    assert_eq!(m.apply(&TensorElement::pure(f.clone(), 0)), p("x1^2", 2));
    assert_eq!(m.apply(&TensorElement::pure(f, 1)), p("-2*x1*x2", 2));

    let m = equivariant_mirror_map(&sl2_irrep(0), &cfg()).unwrap();
    assert_eq!(m.summands[0].coefficients, vec![q(1)]);

    let m = equivariant_mirror_map(&sl2_sum(&[1, 2]).unwrap(), &cfg()).unwrap();
    assert_eq!(m.summands.len(), 2);
    assert_eq!((m.summands[0].offset, m.summands[1].offset), (0, 2));
    assert!(m.summands.iter().all(|s| s.solution_dim == 1 && s.alternates));
    assert_eq!(m.summands[1].coefficients.len(), 3);
}

#[test]
fn mirror_coefficients_solve_the_equations_at_points() {
    // Independent of the solver: plug the coefficients into the point oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let rep = sl2_irrep(3);
    let m = equivariant_mirror_map(&rep, &cfg()).unwrap();
    let n = rep.dim();
    for _ in 0..5 {
        let f = random_homogeneous(&mut rng, n, 3, 4);
        let pt = random_point(&mut rng, n);
        let fe = |x: &[Rational]| f.eval(x);
        for g in rep.generators() {
            let mat = &g.matrix;
            for k in 0..n {
                let (kp, c) = m.partner(k);
                // ψ(X·(f⊗x_k)) = c_k ∂_{k'}(X·f) + Σ_l (-M_kl) c_l ∂_{l'} f
                let xf = |x: &[Rational]| action_at(mat, fe, 3, x);
                let mut lhs = c * &partial_at(xf, 3, kp, &pt);
                for l in 0..n {
                    let (lp, cl) = m.partner(l);
                    lhs -= &(&(mat.get(k, l) * cl) * &partial_at(fe, 3, lp, &pt));
                }
                let dk = |x: &[Rational]| partial_at(fe, 3, kp, x);
                let rhs = c * &action_at(mat, dk, 2, &pt);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn psi_checks_and_negative_control() {
    let rep = sl2_irrep(1);
    let m = equivariant_mirror_map(&rep, &cfg()).unwrap();
    for d in 0..=4 {
        assert!(check_psi_hom(&rep, &m, d, &cfg()).unwrap().passed());
    }
    match check_psi_hom(&rep, &m, 0, &cfg()).unwrap() {
        HomCheck::Pass { checked } => assert_eq!(checked, 3 * 2),
        HomCheck::Counterexample(_) => unreachable!(),
    }
    let flipped = m.with_flipped_sign(0, 1);
    assert!(!check_psi_hom(&rep, &flipped, 2, &cfg()).unwrap().passed());
}

#[test]
fn mirror_needs_builder_shaped_input() {
    let gens = vec![Generator {
        name: "H".into(),
        role: Role::Cartan,
        matrix: QMatrix::from_i64(&[&[1, 0], &[0, -1]]),
    }];
    let rep = RepSpec::validated(2, gens, vec![]).unwrap();
    assert!(matches!(equivariant_mirror_map(&rep, &cfg()), Err(JacError::NotSl2Sum(_))));

    let shuffled = {
        let base = sl2_irrep(1);
        let mut gens = base.generators().to_vec();
        for g in &mut gens {
            let t = g.matrix.transpose();
            g.matrix = QMatrix::from_rows(vec![t.row(1).to_vec(), t.row(0).to_vec()]).transpose();
            g.matrix = QMatrix::from_rows(vec![g.matrix.row(1).to_vec(), g.matrix.row(0).to_vec()]);
        }
        RepSpec::validated(2, gens, vec![Sl2Triple::new("E", "F", "H")]).unwrap()
    };
    assert!(matches!(equivariant_mirror_map(&shuffled, &cfg()), Err(JacError::NotSl2Sum(_))));
}

#[test]
fn fuzz_examples() {
    let summary = fuzz_harness(&FuzzOptions::default(), &cfg());
    assert_eq!(summary.trials.len(), 10);
    assert!(summary.all_passed(), "{summary:?}");
    assert!(summary.passed > 0);
    assert_eq!(summary, fuzz_harness(&FuzzOptions::default(), &cfg()));

    let empty = fuzz_harness(&FuzzOptions { trials: 0, ..FuzzOptions::default() }, &cfg());
    assert!(empty.trials.is_empty() && empty.passed + empty.failed + empty.skipped == 0);

    let bad = fuzz_harness(
        &FuzzOptions {
            corrupt_action: true,
            ..FuzzOptions::default()
        },
        &cfg(),
    );
    assert!(bad.failed > 0);
}

#[test]
fn fuzz_trials_do_not_depend_on_the_trial_count() {
    let short = fuzz_harness(&FuzzOptions { trials: 4, ..FuzzOptions::default() }, &cfg());
    let long = fuzz_harness(&FuzzOptions { trials: 8, ..FuzzOptions::default() }, &cfg());
    assert_eq!(short.trials[..], long.trials[..4]);
}

#[test]
fn full_a1_for_the_zero_subspace_is_consistent() {
    let a0 = GradedPiece::new(2, 0, 10).unwrap();
    assert_eq!(Subspace::full(Ambient::of_piece(&a0)).dim(), 1);
}
