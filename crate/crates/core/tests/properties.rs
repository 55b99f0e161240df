//! Property tests for the library invariants. Matrices come from seeded
//! generators so that every shrunk counterexample is a replayable seed.

use accretive::catalog::{self, check_abs_vs_real, check_convex_combo, CheckConfig, Instance, TradeParam};
use accretive::harness::generators::{
    gaussian_matrix, gen_bidisk, gen_disk, gen_normal, random_center_radius, random_psd, random_unitary,
};
use accretive::linalg::{
    self, abs_adjoint, abs_op, abs_sq, block_off_diag, eig_hermitian, imaginary_part, loewner_leq,
};
use accretive::numrad::numerical_radius;
use accretive::transform::{accretive_via_disk, center_distance, is_accretive, prop_upper_bound, transform_c, Window};
use accretive::window::{biaccretive_feasible, feasible_window, optimal_window, Objective, Variant};
use accretive::{HermitianMatrix, Tolerance, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: Tolerance = Tolerance::DEFAULT;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn window(r: &mut ChaCha8Rng) -> Window {
    let (mu, rad) = random_center_radius(r);
    Window::from_center(mu, rad).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eig_reconstructs(seed in any::<u64>(), n in 1usize..=16) {
        let mut r = rng(seed);
        let h = HermitianMatrix::symmetrize(&gaussian_matrix(&mut r, n));
        let e = eig_hermitian(&h).unwrap();
        let scale = h.frobenius_norm().max(1.0);
        prop_assert!(e.residual(&h) <= 1e-10 * scale);
        prop_assert!(e.unitarity_defect() <= 1e-10);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn moduli_are_psd_with_the_operator_norm(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let a = gaussian_matrix(&mut r, n);
        let norm = linalg::spectral_norm(&a).unwrap();
        for m in [abs_op(&a).unwrap(), abs_adjoint(&a).unwrap()] {
            prop_assert!(linalg::is_psd(&m, TOL).unwrap());
            prop_assert!(rel(linalg::hermitian_norm(&m).unwrap(), norm) <= 1e-10);
        }
    }

    #[test]
    fn off_diagonal_block_norm(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let s = gaussian_matrix(&mut r, n);
        let t = gaussian_matrix(&mut r, n).scale_real(r.random_range(0.1..3.0));
        let b = block_off_diag(&s, &t).unwrap();
        let expect = linalg::spectral_norm(&s).unwrap().max(linalg::spectral_norm(&t).unwrap());
        prop_assert!(rel(linalg::spectral_norm(&b).unwrap(), expect) <= 1e-10);
    }

    #[test]
    fn psd_norm_product(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let x = random_psd(&mut r, n);
        let y = random_psd(&mut r, n);
        let v = catalog::check_norm_product(&x, &y, TOL).unwrap();
        prop_assert!(v.pass);
    }

    #[test]
    fn loewner_is_transitive(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let x = HermitianMatrix::symmetrize(&gaussian_matrix(&mut r, n));
        let y = x.add(&random_psd(&mut r, n));
        let z = y.add(&random_psd(&mut r, n).scale(r.random_range(0.0..1e-9)));
        let xy = loewner_leq(&x, &y, TOL).unwrap();
        let yz = loewner_leq(&y, &z, TOL).unwrap();
        if xy.pass && yz.pass {
            prop_assert!(loewner_leq(&x, &z, Tolerance::new(2.0 * TOL.rel).unwrap()).unwrap().pass);
        }
    }

    #[test]
    fn sqrt_equivalence_sides_agree(seed in any::<u64>(), n in 1usize..=8, factor in 0.3f64..2.0) {
        let mut r = rng(seed);
        let x = random_psd(&mut r, n);
        let y = random_psd(&mut r, n).add(&HermitianMatrix::scalar(n, r.random_range(0.05..1.0)));
        let yi = linalg::inv_sqrt_pd(&y, TOL).unwrap();
        let crit = linalg::spectral_norm(&linalg::sqrt_psd(&x, TOL).unwrap().matmul(&yi)).unwrap().powi(2);
        let v = linalg::sqrt_leq_equiv(&x, &y, (crit * factor).max(1e-6), TOL).unwrap();
        prop_assert!(v.pass);
    }

    #[test]
    fn disk_criterion_matches_direct_test(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let a = gaussian_matrix(&mut r, n).scale_real(w.radius() * r.random_range(0.2..1.5)).shift(C64::new(w.center(), 0.0));
        let disk = accretive_via_disk(&a, w, TOL).unwrap();
        let direct = is_accretive(&transform_c(&a, w), TOL).unwrap();
        if disk != direct {
            let d = center_distance(&a, w.center()).unwrap();
            let scale = (w.radius() * w.radius()).max(d * d).max(1.0);
            prop_assert!((d * d - w.radius() * w.radius()).abs() <= 10.0 * TOL.rel * scale);
        }
    }

    #[test]
    fn imaginary_part_identity(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let a = gaussian_matrix(&mut r, n).scale_real(r.random_range(0.1..5.0));
        let lhs = imaginary_part(&transform_c(&a, w));
        let rhs = imaginary_part(&a).scale(w.big_m() - w.m());
        let scale = linalg::hermitian_norm(&rhs).unwrap().max(1.0);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * scale * (w.big_m() + 1.0));
    }

    #[test]
    fn adjoint_identity(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let a = gaussian_matrix(&mut r, n);
        let lhs = &transform_c(&a.adjoint(), w) - &transform_c(&a, w).adjoint();
        let rhs = abs_sq(&a).sub(&HermitianMatrix::symmetrize(&a.matmul(&a.adjoint())));
        let scale = transform_c(&a, w).frobenius_norm().max(1.0);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * scale);
    }

    #[test]
    fn upper_bound_is_unconditional(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let a = gaussian_matrix(&mut r, n).scale_real(r.random_range(0.1..10.0));
        prop_assert!(prop_upper_bound(&a, w, TOL).unwrap().pass);
    }

    #[test]
    fn window_constants_relations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let c = w.constants();
        prop_assert!((c.k * c.low_k - 1.0).abs() <= 1e-14);
        prop_assert!((c.c1 + c.low_k - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn optimal_window_is_feasible(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let (mu, rad) = random_center_radius(&mut r);
        let (a, _) = gen_disk(&mut r, n, mu, rad, 0.9).unwrap();
        let res = optimal_window(&a, Variant::A, 0.0, Objective::Kantorovich).unwrap();
        prop_assert!(res.feasible);
        let w = res.window.unwrap();
        prop_assert!(feasible_window(&a, Variant::A, w, TOL).unwrap());
        // disk nesting
        let wider_r = (w.radius() * 1.01).min(0.999 * w.center());
        if wider_r > w.radius() {
            let wider = Window::from_center(w.center(), wider_r).unwrap();
            prop_assert!(feasible_window(&a, Variant::A, wider, TOL).unwrap());
        }
    }

    #[test]
    fn biaccretive_implies_both_variants(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let a = gaussian_matrix(&mut r, n).scale_real(0.3 * w.radius()).shift(C64::new(w.center() / 2.0, w.center() / 2.0));
        if biaccretive_feasible(&a, w, TOL).unwrap().holds() {
            prop_assert!(feasible_window(&a, Variant::A, w, TOL).unwrap());
            prop_assert!(feasible_window(&a, Variant::IAStar, w, TOL).unwrap());
        }
    }

    #[test]
    fn radius_width_and_rotation_invariance(seed in any::<u64>(), n in 1usize..=8, phi in 0.0f64..std::f64::consts::TAU) {
        let mut r = rng(seed);
        let a = gaussian_matrix(&mut r, n);
        let eps = 1e-8;
        let scale = linalg::spectral_norm(&a).unwrap().max(1.0);
        let e = numerical_radius(&a, eps).unwrap();
        prop_assert!(e.width() <= eps * scale);
        let rot = numerical_radius(&a.scale(C64::from_polar(1.0, phi)), eps).unwrap();
        prop_assert!(rot.lo <= e.hi + eps * scale && e.lo <= rot.hi + eps * scale);
        let u = random_unitary(&mut r, n).unwrap();
        let sim = numerical_radius(&u.adjoint().matmul(&a).matmul(&u), eps).unwrap();
        prop_assert!(sim.lo <= e.hi + eps * scale && e.lo <= sim.hi + eps * scale);
    }

    #[test]
    fn radius_of_normal_is_spectral_radius(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let a = gen_normal(&mut r, n).unwrap();
        let e = numerical_radius(&a, 1e-8).unwrap();
        // for normal A the spectral radius equals the operator norm
        let rho = linalg::spectral_norm(&a).unwrap();
        prop_assert!(e.contains(rho, 1e-8 * rho.max(1.0)));
    }

    #[test]
    fn shrinking_eps_never_flips_a_pass(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let (mu, rad) = random_center_radius(&mut r);
        let (a, w) = gen_disk(&mut r, n, mu, rad, 0.999).unwrap();
        let inst = Instance::new(a).with_window(w).with_b(gaussian_matrix(&mut r, n));
        for id in ["w.vs_real", "norm.vs_w", "w.lower_sq", "w.commutator.minus", "w.basic_bounds"] {
            let coarse = catalog::evaluate(id, &inst, &CheckConfig { tol: TOL, eps: 1e-4 }).unwrap();
            let fine = catalog::evaluate(id, &inst, &CheckConfig { tol: TOL, eps: 1e-10 }).unwrap();
            if coarse.pass {
                prop_assert!(fine.pass, "{id}");
            }
            prop_assert!(fine.normalized_slack >= coarse.normalized_slack - 1e-15, "{id}");
        }
    }

    #[test]
    fn convex_combo_endpoints_match_single_results(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let mu = r.random_range(0.5..4.0);
        let rad = mu * r.random_range(0.71..0.99);
        let (a, w) = gen_bidisk(&mut r, n, mu, rad, 0.9).unwrap();
        let one = check_convex_combo(&a, w, TradeParam::new(1.0).unwrap(), TOL).unwrap();
        let zero = check_convex_combo(&a, w, TradeParam::new(0.0).unwrap(), TOL).unwrap();
        let a_only = check_abs_vs_real(&a, w, Variant::A, TOL).unwrap();
        let ias = check_abs_vs_real(&a, w, Variant::IAStar, TOL).unwrap();
        prop_assert!((one.slack - a_only.slack).abs() <= 1e-12 * one.slack.abs().max(1.0));
        prop_assert!((zero.slack - ias.slack).abs() <= 1e-12 * zero.slack.abs().max(1.0));
    }

    #[test]
    fn unmet_gates_emit_no_verdict(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let w = window(&mut r);
        let a = gaussian_matrix(&mut r, n).scale_real(3.0 * w.center());
        let inst = Instance::new(a.clone()).with_window(w);
        let v = catalog::evaluate("thm.abs_real.a", &inst, &CheckConfig::default()).unwrap();
        prop_assert_eq!(v.hypothesis_met, accretive_via_disk(&a, w, TOL).unwrap());
        if !v.hypothesis_met {
            prop_assert!(!v.pass && v.slack.is_nan());
        }
    }
}
