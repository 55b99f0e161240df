//! Operator inequalities relating `|A|`, `|A*|`, `ℜA` and `ℑA` under window hypotheses.

use crate::error::{Error, Result};
use crate::linalg::{
    self, abs_adjoint, abs_op, abs_sq, block_off_diag, hermitian_part, imaginary_part, sqrt_psd,
    HermitianMatrix, Matrix, Tolerance,
};
use crate::transform::Window;
use crate::verdict::{Relation, Verdict};
use crate::window::{biaccretive_feasible, feasible_window, Variant};

use super::maps::{PositiveMapSpec, TradeParam};
use super::{gate, Gate};

fn suffix(variant: Variant) -> Result<&'static str> {
    match variant {
        Variant::A => Ok("a"),
        Variant::IAStar => Ok("iastar"),
        Variant::AInv => Ok("ainv"),
        other => Err(Error::InvalidParameter(format!("variant {other} does not apply to this result"))),
    }
}

fn case(prefix: &str, variant: Variant) -> Result<String> {
    Ok(format!("{prefix}.{}", suffix(variant)?))
}

/// `(M+m)ℜX ⪰ Mm I + |X|²`.
fn intermediate(id: &str, x: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let lhs = abs_sq(x).shift(w.m() * w.big_m());
    let rhs = hermitian_part(x).scale(w.m() + w.big_m());
    Verdict::loewner(id, &lhs, &rhs, tol)
}

/// `|X| ⪯ K ℜX` for `X = A`, `iA*` or `A⁻¹` (`|iA*| = |A*|`, `ℜ(iA*) = ℑA`).
pub fn check_abs_vs_real(a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Verdict> {
    let id = case("thm.abs_real", variant)?;
    let x = match gate(&id, Relation::Loewner, a, variant, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let k = w.kantorovich();
    let v = Verdict::loewner(&id, &abs_op(&x)?, &hermitian_part(&x).scale(k), tol)?;
    Ok(v.with_detail("K", k).with_part(intermediate("eq.intermediate", &x, w, tol)?))
}

/// `(M+m)ℜA ⪰ Mm I + |A|²` under `C(A)` accretive.
pub fn check_intermediate(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    match gate("eq.intermediate", Relation::Loewner, a, Variant::A, w, tol)? {
        Gate::Met(x) => intermediate("eq.intermediate", &x, w, tol),
        Gate::NotMet(v) => Ok(v),
    }
}

/// `‖S‖ + ‖T‖ + |‖S‖ − ‖T‖| ≤ K‖S + T‖` under `C([[0, S], [T*, 0]])` accretive.
///
/// The Hermitian part of the block operator has zero diagonal blocks, so it is
/// never positive definite and the hypothesis cannot hold for any window.
pub fn check_block_reverse_triangle(s: &Matrix, t: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let id = "thm.block_triangle";
    let block = block_off_diag(s, t)?;
    if !feasible_window(&block, Variant::A, w, tol)? {
        let lmin = linalg::lambda_min(&hermitian_part(&block))?;
        return Ok(Verdict::not_met(id, Relation::Scalar, "C_{M,m}([[0, S], [T*, 0]]) is not accretive")
            .with_detail("block_real_part_lambda_min", lmin));
    }
    let ns = linalg::spectral_norm(s)?;
    let nt = linalg::spectral_norm(t)?;
    let lhs = ns + nt + (ns - nt).abs();
    let rhs = w.kantorovich() * linalg::spectral_norm(&(s + t))?;
    let max_st = ns.max(nt);
    Ok(Verdict::scalar(id, lhs, rhs, tol)
        .with_detail("max_norm", max_st)
        .with_detail("max_identity_residual", (2.0 * max_st - lhs).abs())
        .with_detail("block_norm", linalg::spectral_norm(&block)?))
}

/// `|X| − ℜX ⪯ (√M − √m)²/(M+m) ‖X‖ I`; the lower side `0 ⪯ |X| − ℜX` is reported
/// as informational because it fails on generic instances.
pub fn check_abs_minus_real(a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Verdict> {
    let id = case("cor.abs_minus_real", variant)?;
    let x = match gate(&id, Relation::Loewner, a, variant, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let diff = abs_op(&x)?.sub(&hermitian_part(&x));
    let n = x.dim();
    let c1 = w.constants().c1;
    let bound = HermitianMatrix::scalar(n, c1 * linalg::spectral_norm(&x)?);
    let upper = Verdict::loewner(&id, &diff, &bound, tol)?;
    let lower = Verdict::loewner(&format!("{id}.lower"), &HermitianMatrix::scalar(n, 0.0), &diff, tol)?;
    Ok(upper.with_detail("c1", c1).with_info(lower))
}

/// `(1−t)|A*| + t|A| ⪯ K((1−t)ℑA + tℜA)` under `C(A)`, `C(iA*)` accretive.
pub fn check_convex_combo(a: &Matrix, w: Window, t: TradeParam, tol: Tolerance) -> Result<Verdict> {
    let id = "thm.convex_combo";
    let bi = biaccretive_feasible(a, w, tol)?;
    if !bi.holds() {
        return Ok(Verdict::not_met(id, Relation::Loewner, "C_{M,m}(A) and C_{M,m}(iA*) are not both accretive")
            .with_detail("c_a_accretive", bi.first)
            .with_detail("c_iastar_accretive", bi.second));
    }
    let t = t.get();
    let lhs = abs_adjoint(a)?.scale(1.0 - t).add(&abs_op(a)?.scale(t));
    let rhs = imaginary_part(a).scale(1.0 - t).add(&hermitian_part(a).scale(t)).scale(w.kantorovich());
    Ok(Verdict::loewner(id, &lhs, &rhs, tol)?.with_detail("t", t))
}

pub const TRADE_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// [`check_convex_combo`] on the grid `t ∈ {0, ¼, ½, ¾, 1}`.
pub fn check_convex_combo_grid(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let parts = TRADE_GRID
        .iter()
        .map(|&t| check_convex_combo(a, w, TradeParam::new(t)?, tol))
        .collect::<Result<Vec<_>>>()?;
    if !parts[0].hypothesis_met {
        return Ok(parts.into_iter().next().expect("grid is non-empty"));
    }
    Ok(Verdict::conjunction("thm.convex_combo", parts))
}

/// `|X|² ⪯ K² (ℜX)²`, with the scalar certificate `f(t) = K²t² − (M+m)t + Mm ≥ 0`.
pub fn check_squared(a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Verdict> {
    let id = case("thm.squared", variant)?;
    let x = match gate(&id, Relation::Loewner, a, variant, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let k = w.kantorovich();
    let re = hermitian_part(&x);
    let v = Verdict::loewner(&id, &abs_sq(&x), &re.square().scale(k * k), tol)?;
    let (m, big_m) = (w.m(), w.big_m());
    let f = |t: f64| k * k * t * t - (m + big_m) * t + m * big_m;
    let cert = linalg::eigvals_hermitian(&re)?.into_iter().map(f).fold(f64::INFINITY, f64::min);
    Ok(v.with_detail("certificate_min", cert)
        .with_detail("certificate_at_root", f(2.0 * m * big_m / (m + big_m))))
}

fn inverse_pd(x: &HermitianMatrix, tol: Tolerance) -> Result<Option<HermitianMatrix>> {
    let e = linalg::eig_hermitian(x)?;
    let scale = e.lambda_min().abs().max(e.lambda_max().abs());
    if e.lambda_min() <= tol.abs(scale) {
        return Ok(None);
    }
    Ok(Some(e.map(|l| 1.0 / l)))
}

/// `|X| R⁻¹ + R⁻¹ |X| ⪯ (M+m)/√(Mm) I` and the same for its absolute value, `R = ℜX`.
pub fn check_anticommutator(a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Verdict> {
    if variant == Variant::AInv {
        return Err(Error::InvalidParameter("the anticommutator bound has no inverse variant".into()));
    }
    let id = case("cor.anticommutator", variant)?;
    let x = match gate(&id, Relation::Loewner, a, variant, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let re = hermitian_part(&x);
    let Some(re_inv) = inverse_pd(&re, tol)? else {
        return Ok(Verdict::not_met(&id, Relation::Loewner, "the real part is not invertible"));
    };
    let p = abs_op(&x)?;
    let pr = p.matmul(&re_inv);
    let s = HermitianMatrix::symmetrize(&(&pr + &re_inv.matmul(&p)));
    let abs_s = linalg::eig_hermitian(&s)?.map(f64::abs);
    let k = w.kantorovich();
    let bound = HermitianMatrix::scalar(x.dim(), 2.0 * k);
    let low_k = 1.0 / k;
    let v = Verdict::loewner(&id, &abs_s, &bound, tol)?
        .with_part(Verdict::loewner(&format!("{id}.plain"), &s, &bound, tol)?)
        .with_part(Verdict::loewner("rem.sandwich", &p.square().scale(low_k * low_k), &re.square(), tol)?)
        .with_part(linalg::psd_block_norm_equiv(&pr, k, tol)?);
    Ok(v.with_detail("norm_abs_times_real_inverse", linalg::spectral_norm(&pr)?))
}

/// `(ℜA)² ⪰ (2√(Mm)/(M+m))² |A|²`; the intermediate links of the chain leading
/// to it are reported as informational parts.
pub fn check_sandwich(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let id = "rem.sandwich";
    let x = match gate(id, Relation::Loewner, a, Variant::A, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let re = hermitian_part(&x);
    let Some(re_inv) = inverse_pd(&re, tol)? else {
        return Ok(Verdict::not_met(id, Relation::Loewner, "the real part is not invertible"));
    };
    let k = w.kantorovich();
    let p = abs_op(&x)?;
    let p2 = p.square();
    let re2 = re.square();
    let v = Verdict::loewner(id, &p2.scale(1.0 / (k * k)), &re2, tol)?;

    let sandwich = HermitianMatrix::symmetrize(&p.matmul(&re_inv.square()).matmul(&p));
    let q = linalg::hermitian_norm(&sandwich)?;
    let anti = HermitianMatrix::symmetrize(&(&p.matmul(&re_inv) + &re_inv.matmul(&p)));
    let half_anti = 0.5 * linalg::hermitian_norm(&anti)?;
    let first = Verdict::loewner(&format!("{id}.first"), &p2.scale(1.0 / q), &re2, tol)?;
    let middle = Verdict::scalar(&format!("{id}.middle"), q, half_anti * half_anti, tol);
    let last = Verdict::scalar(&format!("{id}.last"), half_anti * half_anti, k * k, tol);
    Ok(v.with_info(first).with_info(middle).with_info(last))
}

/// `Φ^{1/2}(|A|²) ⪯ K Φ(|A|)` under `C(|A|)` accretive, and the unconditional
/// `Φ(|A|) ⪯ Φ^{1/2}(|A|²)`. Returns `(lem.posmap, ineq.posmap_reverse)`.
pub fn check_positive_map(
    a: &Matrix,
    w: Window,
    phi: &PositiveMapSpec,
    tol: Tolerance,
) -> Result<(Verdict, Verdict)> {
    let phi_abs = phi.apply(&abs_op(a)?)?;
    let root = sqrt_psd(&phi.apply(&abs_sq(a))?, tol)?;
    let reverse = Verdict::loewner("ineq.posmap_reverse", &phi_abs, &root, tol)?;
    let lemma = if feasible_window(a, Variant::AbsA, w, tol)? {
        Verdict::loewner("lem.posmap", &root, &phi_abs.scale(w.kantorovich()), tol)?
    } else {
        Verdict::not_met("lem.posmap", Relation::Loewner, "C_{M,m}(|A|) is not accretive")
    };
    Ok((lemma, reverse))
}

/// Gate for the reverse results: `C(|X|)` accretive, i.e. the singular values of
/// `X` lie in `[m, M]` for `X = A`, `iA*` or `A⁻¹`.
fn reverse_gate(id: &str, a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Gate> {
    let abs_variant = match variant {
        Variant::A | Variant::AInv => Variant::AbsA,
        Variant::IAStar => Variant::AbsIAStar,
        other => return Err(Error::InvalidParameter(format!("variant {other} does not apply to this result"))),
    };
    let x = match variant.image(a) {
        Ok(x) => x,
        Err(e @ (Error::Singular { .. } | Error::IllConditioned { .. })) => {
            return Ok(Gate::NotMet(Verdict::not_met(id, Relation::Loewner, format!("A is not invertible: {e}"))))
        }
        Err(e) => return Err(e),
    };
    let base = if variant == Variant::AInv { &x } else { a };
    if feasible_window(base, abs_variant, w, tol)? {
        Ok(Gate::Met(x))
    } else {
        Ok(Gate::NotMet(Verdict::not_met(id, Relation::Loewner, "singular values are outside [m, M]")))
    }
}

/// `ℜX ⪯ K|X|` under `C(|X|)` accretive.
pub fn check_reverse(a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Verdict> {
    let id = case("thm.reverse", variant)?;
    let x = match reverse_gate(&id, a, w, variant, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    Verdict::loewner(&id, &hermitian_part(&x), &abs_op(&x)?.scale(w.kantorovich()), tol)
}

/// `ℜX − |X| ⪯ (√M − √m)²/(2√(Mm)) ‖X‖ I` under `C(|X|)` accretive. The constant
/// `(M−m)²/(2√(Mm))` is checked as an informational part: it is smaller than
/// the one above whenever `√M + √m < 1`.
pub fn check_real_minus_abs(a: &Matrix, w: Window, variant: Variant, tol: Tolerance) -> Result<Verdict> {
    if variant == Variant::AInv {
        return Err(Error::InvalidParameter("this bound has no inverse variant".into()));
    }
    let id = case("cor.real_minus_abs", variant)?;
    let x = match reverse_gate(&id, a, w, variant, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let diff = hermitian_part(&x).sub(&abs_op(&x)?);
    let norm = linalg::spectral_norm(&x)?;
    let c = w.constants();
    let n = x.dim();
    let v = Verdict::loewner(&id, &diff, &HermitianMatrix::scalar(n, c.c2_tight * norm), tol)?;
    let stated = Verdict::loewner(&format!("{id}.stated_constant"), &diff, &HermitianMatrix::scalar(n, c.c2 * norm), tol)?;
    Ok(v.with_detail("c2_tight", c.c2_tight).with_detail("c2", c.c2).with_info(stated))
}

/// `A ⪯ αB ⇔ ‖A^{1/2}B^{−1/2}‖ ≤ √α` for PSD `A`, positive definite `B`.
pub fn check_sqrt_equiv(x: &Matrix, y: &Matrix, alpha: f64, tol: Tolerance) -> Result<Verdict> {
    let x = HermitianMatrix::new(x.clone())?;
    let y = HermitianMatrix::new(y.clone())?;
    linalg::sqrt_leq_equiv(&x, &y, alpha, tol)
}

/// `‖XY‖ ≤ ¼‖X + Y‖²` for PSD `X`, `Y`.
pub fn check_norm_product(x: &Matrix, y: &Matrix, tol: Tolerance) -> Result<Verdict> {
    let x = HermitianMatrix::new(x.clone())?;
    let y = HermitianMatrix::new(y.clone())?;
    for h in [&x, &y] {
        if !linalg::is_psd(h, tol)? {
            return Ok(Verdict::not_met("prop.norm_product", Relation::Scalar, "operands must be PSD"));
        }
    }
    let lhs = linalg::spectral_norm(&x.matmul(&y))?;
    let s = linalg::hermitian_norm(&x.add(&y))?;
    Ok(Verdict::scalar("prop.norm_product", lhs, 0.25 * s * s, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;
    use crate::verdict::Status;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }
    fn w(m: f64, big_m: f64) -> Window {
        Window::new(m, big_m).unwrap()
    }
    fn remark() -> Matrix {
        Matrix::from_rows(&[vec![c(5.0, -4.0), c(0.0, 2.0)], vec![c(1.0, 1.0), c(6.0, 0.0)]]).unwrap()
    }
    fn example() -> Matrix {
        Matrix::from_real_rows(&[vec![2.0, 0.0], vec![-1.0, 4.0]]).unwrap()
    }
    fn jordan() -> Matrix {
        Matrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap()
    }
    const TOL: Tolerance = Tolerance::DEFAULT;

    #[test]
    fn abs_vs_real_examples() {
        let v = check_abs_vs_real(&Matrix::identity(2), w(0.5, 2.0), Variant::A, TOL).unwrap();
        assert!(v.pass && (v.slack - 0.25).abs() < 1e-14);
        let v = check_abs_vs_real(&Matrix::diag_real(&[1.0, 4.0]), w(1.0, 4.0), Variant::A, TOL).unwrap();
        assert!(v.pass);
        let v = check_abs_vs_real(&remark(), w(4.0, 50.0), Variant::A, TOL).unwrap();
        assert!(v.pass, "{}", v.to_json());
        let v = check_abs_vs_real(&jordan(), w(1.0, 2.0), Variant::A, TOL).unwrap();
        assert_eq!(v.status, Status::HypothesisNotMet);
        assert!(check_abs_vs_real(&jordan(), w(1.0, 2.0), Variant::IA, TOL).is_err());
    }

    #[test]
    fn block_triangle_never_met() {
        let i = Matrix::identity(2);
        for (m, big_m) in [(0.5, 2.0), (0.1, 50.0), (0.9, 1.1)] {
            let v = check_block_reverse_triangle(&i, &i, w(m, big_m), TOL).unwrap();
            assert!(!v.hypothesis_met);
            let v = check_block_reverse_triangle(&i, &i.scale_real(-1.0), w(m, big_m), TOL).unwrap();
            assert!(!v.hypothesis_met);
        }
    }

    #[test]
    fn abs_minus_real_examples() {
        let v = check_abs_minus_real(&Matrix::identity(2), w(0.5, 2.0), Variant::A, TOL).unwrap();
        assert!(v.pass && v.informational_failures() == 0);
        let v = check_abs_minus_real(&example(), w(0.01, 8.0), Variant::A, TOL).unwrap();
        assert!(v.pass);
        let v = check_abs_minus_real(&jordan(), w(1.0, 2.0), Variant::A, TOL).unwrap();
        assert!(!v.hypothesis_met);
    }

    #[test]
    fn convex_combo_endpoints_match_abs_vs_real() {
        let mu = 2.0;
        let a = Matrix::from_rows(&[vec![c(1.0, 1.0), c(0.1, 0.05)], vec![c(-0.05, 0.1), c(1.1, 0.9)]]).unwrap();
        let win = Window::from_center(mu, 0.9 * mu).unwrap();
        assert!(biaccretive_feasible(&a, win, TOL).unwrap().holds());
        let one = check_convex_combo(&a, win, TradeParam::new(1.0).unwrap(), TOL).unwrap();
        let zero = check_convex_combo(&a, win, TradeParam::new(0.0).unwrap(), TOL).unwrap();
        let ra = check_abs_vs_real(&a, win, Variant::A, TOL).unwrap();
        let ri = check_abs_vs_real(&a, win, Variant::IAStar, TOL).unwrap();
        assert!((one.slack - ra.slack).abs() < 1e-12);
        assert!((zero.slack - ri.slack).abs() < 1e-12);
        let grid = check_convex_combo_grid(&a, win, TOL).unwrap();
        assert!(grid.pass && grid.parts.len() == 5);
        let v = check_convex_combo(&Matrix::identity(2), w(0.5, 2.0), TradeParam::new(0.5).unwrap(), TOL).unwrap();
        assert!(!v.hypothesis_met);
    }

    #[test]
    fn squared_examples() {
        let v = check_squared(&Matrix::identity(2), w(0.5, 2.0), Variant::A, TOL).unwrap();
        assert!(v.pass && (v.slack - 0.5625).abs() < 1e-14);
        assert!(v.details["certificate_at_root"].as_f64().unwrap().abs() < 1e-12);
        let v = check_squared(&remark(), w(4.0, 50.0), Variant::A, TOL).unwrap();
        assert!(v.pass);
    }

    #[test]
    fn anticommutator_examples() {
        let v = check_anticommutator(&Matrix::identity(2), w(0.5, 2.0), Variant::A, TOL).unwrap();
        assert!(v.pass && (v.slack - 0.5).abs() < 1e-14, "{}", v.to_json());
        let v = check_anticommutator(&Matrix::diag_real(&[1.0, 4.0]), w(1.0, 4.0), Variant::A, TOL).unwrap();
        assert!(v.pass && (v.slack - 0.5).abs() < 1e-13);
        let v = check_anticommutator(&remark(), w(4.0, 50.0), Variant::A, TOL).unwrap();
        assert!(v.pass, "{}", v.to_json());
    }

    #[test]
    fn sandwich_on_remark_matrix() {
        let v = check_sandwich(&remark(), w(4.0, 50.0), TOL).unwrap();
        assert!(v.pass);
        assert_eq!(v.parts.len(), 3);
    }

    #[test]
    fn positive_map_examples() {
        let d = Matrix::diag_real(&[1.0, 4.0]);
        let e1 = PositiveMapSpec::VectorState { x: vec![c(1.0, 0.0), c(0.0, 0.0)] };
        let (lem, rev) = check_positive_map(&d, w(1.0, 4.0), &e1, TOL).unwrap();
        assert!(lem.pass && rev.pass);
        assert!((lem.slack - 0.25).abs() < 1e-14 && rev.slack.abs() < 1e-14);
        let (lem, rev) = check_positive_map(&d, w(1.0, 4.0), &PositiveMapSpec::NormalizedTrace, TOL).unwrap();
        assert!(lem.pass && rev.pass);
        assert!((lem.lhs_summary - 8.5f64.sqrt()).abs() < 1e-14);
        assert!((rev.lhs_summary - 2.5).abs() < 1e-14 && (lem.rhs_summary - 3.125).abs() < 1e-14);
        let (lem, _) = check_positive_map(&d, w(1.5, 4.0), &PositiveMapSpec::NormalizedTrace, TOL).unwrap();
        assert!(!lem.hypothesis_met);
    }

    #[test]
    fn reverse_examples() {
        let h = Matrix::from_rows(&[vec![c(2.0, 0.0), c(0.5, 0.5)], vec![c(0.5, -0.5), c(3.0, 0.0)]]).unwrap();
        let sv = linalg::singular_values(&h).unwrap();
        let v = check_reverse(&h, w(sv[0], sv[1] + 1e-9), Variant::A, TOL).unwrap();
        assert!(v.pass);
        let rsv = linalg::singular_values(&remark()).unwrap();
        let win = w(rsv[0] * 0.99, rsv[1] * 1.01);
        assert!(check_reverse(&remark(), win, Variant::A, TOL).unwrap().pass);
        assert!(check_real_minus_abs(&remark(), win, Variant::A, TOL).unwrap().pass);
        let theta = 0.7f64;
        let u = Matrix::from_rows(&[
            vec![c(theta.cos(), 0.0), c(-theta.sin(), 0.0)],
            vec![c(theta.sin(), 0.0), c(theta.cos(), 0.0)],
        ])
        .unwrap();
        assert!(check_reverse(&u, w(0.9, 1.1), Variant::A, TOL).unwrap().pass);
        assert!(!check_reverse(&jordan(), w(0.9, 1.1), Variant::A, TOL).unwrap().hypothesis_met);
        assert!(!check_reverse(&jordan(), w(0.9, 1.1), Variant::AInv, TOL).unwrap().hypothesis_met);
    }

    #[test]
    fn stated_constant_is_smaller_on_small_windows() {
        let c = w(0.028, 0.10).constants();
        assert!(c.c2 < c.c2_tight);
        let c = w(1.0, 4.0).constants();
        assert!(c.c2 > c.c2_tight);
    }

    #[test]
    fn sqrt_equiv_and_norm_product() {
        let v = check_sqrt_equiv(&Matrix::diag_real(&[4.0, 0.0]), &Matrix::identity(2), 4.0, TOL).unwrap();
        assert!(v.pass);
        let v = check_norm_product(&Matrix::diag_real(&[1.0, 0.0]), &Matrix::diag_real(&[1.0, 0.0]), TOL).unwrap();
        assert!(v.pass && (v.lhs_summary - 1.0).abs() < 1e-15);
        let v = check_norm_product(&Matrix::diag_real(&[-1.0, 0.0]), &Matrix::identity(2), TOL).unwrap();
        assert!(!v.hypothesis_met);
    }
}
