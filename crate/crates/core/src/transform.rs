//! The transform `C_{M,m}(A) = (MI − A*)(A − mI)` and its basic properties.
//!
//! Accretivity of the transform has a geometric reading: expanding the
//! product gives
//!
//! ```text
//! ℜC_{M,m}(A) + |A − μI|² = r² I,     μ = (M+m)/2,  r = (M−m)/2,
//! ```
//!
//! so `C_{M,m}(A)` is accretive exactly when `‖A − μI‖ ≤ r`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    self, abs_op, abs_sq, hermitian_part, imaginary_part, is_psd, lambda_min, HermitianMatrix,
    Matrix, Tolerance, C64,
};
use crate::verdict::{Relation, Verdict};

/// Residual bound for exact algebraic identities, relative to their natural scale.
pub const IDENTITY_REL: f64 = 1e-12;

/// The pair `(m, M)` with `0 < m < M`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WindowRepr", into = "WindowRepr")]
pub struct Window {
    m: f64,
    big_m: f64,
}

#[derive(Serialize, Deserialize)]
struct WindowRepr {
    m: f64,
    #[serde(rename = "M")]
    big_m: f64,
}

impl TryFrom<WindowRepr> for Window {
    type Error = Error;
    fn try_from(r: WindowRepr) -> Result<Self> {
        Window::new(r.m, r.big_m)
    }
}

impl From<Window> for WindowRepr {
    fn from(w: Window) -> Self {
        WindowRepr { m: w.m, big_m: w.big_m }
    }
}

impl Window {
    pub fn new(m: f64, big_m: f64) -> Result<Self> {
        if !(m.is_finite() && big_m.is_finite() && m > 0.0 && m < big_m) {
            return Err(Error::InvalidWindow { m, big_m });
        }
        Ok(Self { m, big_m })
    }

    /// Window `(μ − r, μ + r)`.
    pub fn from_center(mu: f64, r: f64) -> Result<Self> {
        Self::new(mu - r, mu + r)
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn big_m(&self) -> f64 {
        self.big_m
    }

    pub fn center(&self) -> f64 {
        (self.big_m + self.m) / 2.0
    }

    pub fn radius(&self) -> f64 {
        (self.big_m - self.m) / 2.0
    }

    /// `(M+m)/(2√(Mm))`.
    pub fn kantorovich(&self) -> f64 {
        (self.big_m + self.m) / (2.0 * (self.big_m * self.m).sqrt())
    }

    pub fn constants(&self) -> WindowConstants {
        let (m, big_m) = (self.m, self.big_m);
        let gm = (big_m * m).sqrt();
        let sum = big_m + m;
        let diff = big_m - m;
        let low_k = 2.0 * gm / sum;
        WindowConstants {
            mu: sum / 2.0,
            r: diff / 2.0,
            k: sum / (2.0 * gm),
            diff,
            c1: (big_m.sqrt() - m.sqrt()).powi(2) / sum,
            c2: diff * diff / (2.0 * gm),
            c2_tight: (big_m.sqrt() - m.sqrt()).powi(2) / (2.0 * gm),
            low_k,
            sq: 2.0 * big_m * m / (sum * sum),
        }
    }
}

/// Constants derived from a window.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowConstants {
    /// Center `(M+m)/2`.
    pub mu: f64,
    /// Radius `(M−m)/2`.
    pub r: f64,
    /// Kantorovich ratio `(M+m)/(2√(Mm))`.
    pub k: f64,
    /// `M − m`.
    pub diff: f64,
    /// `(√M − √m)²/(M+m) = 1 − 1/K`.
    pub c1: f64,
    /// `(M−m)²/(2√(Mm))`.
    pub c2: f64,
    /// `(√M − √m)²/(2√(Mm)) = K − 1`.
    pub c2_tight: f64,
    /// `2√(Mm)/(M+m) = 1/K`.
    pub low_k: f64,
    /// `2Mm/(M+m)²`.
    pub sq: f64,
}

/// `(MI − A*)(A − mI)`.
pub fn transform_c(a: &Matrix, w: Window) -> Matrix {
    let left = a.adjoint().scale_real(-1.0).shift(C64::new(w.big_m(), 0.0));
    let right = a.shift(C64::new(-w.m(), 0.0));
    left.matmul(&right)
}

/// `ℜX ⪰ 0` (non-strict).
pub fn is_accretive(x: &Matrix, tol: Tolerance) -> Result<bool> {
    is_psd(&hermitian_part(x), tol)
}

/// `ℑX ⪰ 0` (non-strict).
pub fn is_dissipative(x: &Matrix, tol: Tolerance) -> Result<bool> {
    is_psd(&imaginary_part(x), tol)
}

/// `λ_min(ℜX) > tol · max(1, ‖ℜX‖)`.
pub fn is_strictly_accretive(x: &Matrix, tol: Tolerance) -> Result<bool> {
    let ev = linalg::eigvals_hermitian(&hermitian_part(x))?;
    let scale = ev[0].abs().max(ev[ev.len() - 1].abs());
    Ok(ev[0] > tol.abs(scale))
}

/// `‖A − μI‖`.
pub fn center_distance(a: &Matrix, mu: f64) -> Result<f64> {
    linalg::spectral_norm(&a.shift(C64::new(-mu, 0.0)))
}

/// Accretivity of `C_{M,m}(A)` decided through `‖A − μI‖ ≤ r`.
pub fn accretive_via_disk(a: &Matrix, w: Window, tol: Tolerance) -> Result<bool> {
    let r = w.radius();
    Ok(center_distance(a, w.center())? <= r + tol.abs(r))
}

/// Natural magnitude of `C_{M,m}(A)` and related expressions.
pub fn transform_scale(a_norm: f64, w: Window) -> f64 {
    let c = w.constants();
    (w.big_m() + a_norm).max(1.0) * (w.m() + a_norm).max(1.0) + c.r * c.r
}

/// `‖ℜC_{M,m}(A) + |A − μI|² − r²I‖`.
pub fn identity_residual(a: &Matrix, w: Window) -> Result<f64> {
    let c = w.constants();
    let re_c = hermitian_part(&transform_c(a, w));
    let shifted = a.shift(C64::new(-c.mu, 0.0));
    let total = re_c.add(&abs_sq(&shifted)).shift(-c.r * c.r);
    linalg::hermitian_norm(&total)
}

fn dead_band(value: f64, threshold: f64, band: f64) -> bool {
    (value - threshold).abs() <= band
}

/// The seven basic properties of the transform, as verdicts `prop.1` … `prop.7`.
pub fn prop_checks(a: &Matrix, w: Window, tol: Tolerance) -> Result<Vec<Verdict>> {
    Ok(vec![
        prop_normal(a, w, tol)?,
        prop_self_adjoint(a, w, tol)?,
        prop_abs_band(a, w, tol)?,
        prop_upper_bound(a, w, tol)?,
        prop_imaginary(a, w, tol)?,
        prop_accretive_implies(a, w, tol)?,
        prop_accretive_dissipative(a, w, tol)?,
    ])
}

/// `C(A*) = C*(A) ⇔ A normal`, with the identity `C(A*) − C*(A) = |A|² − |A*|²`.
pub fn prop_normal(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let a_norm = linalg::spectral_norm(a)?;
    let scale = transform_scale(a_norm, w);
    let ca_star = transform_c(&a.adjoint(), w);
    let c_adj = transform_c(a, w).adjoint();
    let diff = &ca_star - &c_adj;
    let commutator = &a.adjoint_mul(a) - &a.matmul(&a.adjoint());
    let left_norm = linalg::spectral_norm(&diff)?;
    let right_norm = linalg::spectral_norm(&commutator)?;
    let residual = linalg::spectral_norm(&(&diff - &commutator))?;

    let threshold = tol.rel * scale;
    let left = left_norm <= threshold;
    let right = right_norm <= threshold;
    let boundary = dead_band(left_norm, threshold, 10.0 * threshold)
        || dead_band(right_norm, threshold, 10.0 * threshold);
    Ok(Verdict::equivalence("prop.1", left, right, boundary, (threshold - left_norm) / scale)
        .with_detail("transform_defect", left_norm)
        .with_detail("commutator_norm", right_norm)
        .with_part(Verdict::within("prop.1.identity", residual, IDENTITY_REL * scale)))
}

/// `C(A) = C*(A) ⇔ A self-adjoint`, with `C(A) − C*(A) = (M−m)(A − A*)`.
pub fn prop_self_adjoint(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let a_norm = linalg::spectral_norm(a)?;
    let scale = transform_scale(a_norm, w);
    let c = transform_c(a, w);
    let diff = &c - &c.adjoint();
    let skew = a - &a.adjoint();
    let left_norm = linalg::spectral_norm(&diff)?;
    let skew_norm = linalg::spectral_norm(&skew)?;
    let residual = linalg::spectral_norm(&(&diff - &skew.scale_real(w.big_m() - w.m())))?;

    let threshold = tol.rel * scale;
    let left = left_norm <= threshold;
    let right = (w.big_m() - w.m()) * skew_norm <= threshold;
    let boundary = dead_band(left_norm, threshold, 10.0 * threshold)
        || dead_band((w.big_m() - w.m()) * skew_norm, threshold, 10.0 * threshold);
    Ok(Verdict::equivalence("prop.2", left, right, boundary, (threshold - left_norm) / scale)
        .with_detail("transform_skew_norm", left_norm)
        .with_detail("skew_norm", skew_norm)
        .with_part(Verdict::within("prop.2.identity", residual, IDENTITY_REL * scale)))
}

/// `C(|A|)` accretive `⇔ mI ⪯ |A| ⪯ MI`.
pub fn prop_abs_band(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let abs = abs_op(a)?;
    let re_c = hermitian_part(&transform_c(&abs, w));
    let lmin = lambda_min(&re_c)?;
    let c_scale = linalg::hermitian_norm(&re_c)?.max(1.0);
    let sv = linalg::singular_values(a)?;
    let (smin, smax) = (sv[0], sv[sv.len() - 1]);
    let s_tol = tol.abs(w.big_m());
    let left = lmin >= -tol.rel * c_scale;
    let right = smin >= w.m() - s_tol && smax <= w.big_m() + s_tol;
    // |A| loses accuracy near zero singular values: √ of a rounding-level eigenvalue.
    let sqrt_band = 10.0 * (f64::EPSILON * smax * smax.max(1.0)).sqrt();
    let boundary = dead_band(lmin, 0.0, 10.0 * tol.rel * c_scale)
        || dead_band(smin, w.m(), 10.0 * s_tol + sqrt_band)
        || dead_band(smax, w.big_m(), 10.0 * s_tol);
    Ok(Verdict::equivalence("prop.3", left, right, boundary, lmin / c_scale)
        .with_detail("lambda_min_re_c_abs", lmin)
        .with_detail("sigma_min", smin)
        .with_detail("sigma_max", smax))
}

/// `ℜC(A) ⪯ r²I` and `ℜC(iA*) ⪯ r²I`, unconditionally.
pub fn prop_upper_bound(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let n = a.dim();
    let r2 = HermitianMatrix::scalar(n, w.radius().powi(2));
    let re_c = hermitian_part(&transform_c(a, w));
    let ia_star = a.adjoint().scale(C64::new(0.0, 1.0));
    let re_c_i = hermitian_part(&transform_c(&ia_star, w));
    let first = Verdict::loewner("prop.4", &re_c, &r2, tol)?;
    let second = Verdict::loewner("prop.4.i_adjoint", &re_c_i, &r2, tol)?;
    Ok(first.with_part(second))
}

/// `ℑC(A) = (M−m)ℑA`, hence `ℑC(A) ⪰ 0 ⇔ ℑA ⪰ 0`.
pub fn prop_imaginary(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let a_norm = linalg::spectral_norm(a)?;
    let scale = transform_scale(a_norm, w);
    let im_c = imaginary_part(&transform_c(a, w));
    let im_a = imaginary_part(a);
    let residual = linalg::hermitian_norm(&im_c.sub(&im_a.scale(w.big_m() - w.m())))?;
    let lc = lambda_min(&im_c)?;
    let la = lambda_min(&im_a)?;
    let c_scale = linalg::hermitian_norm(&im_c)?.max(1.0);
    let a_scale = linalg::hermitian_norm(&im_a)?.max(1.0);
    let left = lc >= -tol.rel * c_scale;
    let right = la >= -tol.rel * a_scale;
    let boundary = dead_band(lc, 0.0, 10.0 * tol.rel * c_scale)
        || dead_band(la, 0.0, 10.0 * tol.rel * a_scale);
    Ok(Verdict::equivalence("prop.5", left, right, boundary, lc / c_scale)
        .with_detail("lambda_min_im_c", lc)
        .with_detail("lambda_min_im_a", la)
        .with_part(Verdict::within("prop.5.identity", residual, IDENTITY_REL * scale)))
}

/// If `C(A)` is accretive then `A` is accretive. The converse is not claimed;
/// counterexamples to it are reported as an informational part.
pub fn prop_accretive_implies(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let c = transform_c(a, w);
    let hyp = is_accretive(&c, tol)?;
    let a_acc = is_accretive(a, tol)?;
    let converse = Verdict::implication("prop.6.converse", a_acc, hyp);
    if !hyp {
        return Ok(Verdict::not_met("prop.6", Relation::Loewner, "C_{M,m}(A) is not accretive")
            .with_info(converse));
    }
    let n = a.dim();
    let v = Verdict::loewner("prop.6", &HermitianMatrix::scalar(n, 0.0), &hermitian_part(a), tol)?;
    Ok(v.with_info(converse))
}

/// If `C(A)` is accretive-dissipative then so is `A`.
pub fn prop_accretive_dissipative(a: &Matrix, w: Window, tol: Tolerance) -> Result<Verdict> {
    let c = transform_c(a, w);
    let hyp = is_accretive(&c, tol)? && is_dissipative(&c, tol)?;
    let a_ad = is_accretive(a, tol)? && is_dissipative(a, tol)?;
    let converse = Verdict::implication("prop.7.converse", a_ad, hyp);
    if !hyp {
        return Ok(Verdict::not_met(
            "prop.7",
            Relation::Loewner,
            "C_{M,m}(A) is not accretive-dissipative",
        )
        .with_info(converse));
    }
    let zero = HermitianMatrix::scalar(a.dim(), 0.0);
    let re = Verdict::loewner("prop.7", &zero, &hermitian_part(a), tol)?;
    let im = Verdict::loewner("prop.7.dissipative", &zero, &imaginary_part(a), tol)?;
    Ok(re.with_part(im).with_info(converse))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Status;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn remark_matrix() -> Matrix {
        Matrix::from_rows(&[vec![c(5.0, -4.0), c(0.0, 2.0)], vec![c(1.0, 1.0), c(6.0, 0.0)]]).unwrap()
    }

    fn example_matrix() -> Matrix {
        Matrix::from_real_rows(&[vec![2.0, 0.0], vec![-1.0, 4.0]]).unwrap()
    }

    fn jordan() -> Matrix {
        Matrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap()
    }

    #[test]
    fn window_validation_and_serde() {
        assert!(Window::new(0.0, 1.0).is_err());
        assert!(Window::new(2.0, 1.0).is_err());
        assert!(Window::new(1.0, 1.0).is_err());
        let w = Window::new(4.0, 50.0).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"m":4.0,"M":50.0}"#);
        let back: Window = serde_json::from_str(r#"{"m":0.01,"M":8}"#).unwrap();
        assert_eq!(back, Window::new(0.01, 8.0).unwrap());
        assert!(serde_json::from_str::<Window>(r#"{"m":3,"M":1}"#).is_err());
    }

    #[test]
    fn constants_relations() {
        let k = Window::new(1.0, 4.0).unwrap().constants();
        assert!((k.k - 1.25).abs() < 1e-15);
        assert!((k.k * k.low_k - 1.0).abs() < 1e-14);
        assert!((k.c1 + k.low_k - 1.0).abs() < 1e-14);
        assert!((k.mu - k.r - 1.0).abs() < 1e-15 && (k.mu + k.r - 4.0).abs() < 1e-15);
        assert!((k.c2_tight - (k.k - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn transform_of_remark_matrix() {
        let cm = transform_c(&remark_matrix(), Window::new(4.0, 50.0).unwrap());
        let expected = Matrix::from_rows(&[
            vec![c(27.0, -184.0), c(6.0, 92.0)],
            vec![c(52.0, 46.0), c(84.0, 0.0)],
        ])
        .unwrap();
        assert!(cm.max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn transform_scalar_cases() {
        let cm = transform_c(&Matrix::identity(2), Window::new(0.5, 2.0).unwrap());
        assert!(cm.max_abs_diff(&Matrix::scalar(2, c(0.5, 0.0))) < 1e-15);
        // (8I − A^T)(A − 0.01I) by hand
        let cm = transform_c(&example_matrix(), Window::new(0.01, 8.0).unwrap());
        let expected = Matrix::from_real_rows(&[vec![10.94, 3.99], vec![-4.0, 15.96]]).unwrap();
        assert!(cm.max_abs_diff(&expected) < 1e-12, "{cm:?}");
    }

    #[test]
    fn accretivity_examples() {
        let tol = Tolerance::default();
        assert!(is_accretive(&Matrix::identity(2), tol).unwrap());
        let cm = transform_c(&remark_matrix(), Window::new(4.0, 50.0).unwrap());
        assert!(is_accretive(&cm, tol).unwrap());
        let i_i = Matrix::scalar(2, c(0.0, 1.0));
        assert!(is_dissipative(&i_i, tol).unwrap());
        assert!(is_accretive(&i_i, tol).unwrap());
        assert!(!is_strictly_accretive(&i_i, tol).unwrap());
    }

    #[test]
    fn disk_examples() {
        let tol = Tolerance::default();
        for (m, big_m) in [(0.5, 2.0), (1.0, 9.0), (0.01, 8.0)] {
            let w = Window::new(m, big_m).unwrap();
            assert!(accretive_via_disk(&Matrix::scalar(3, c(w.center(), 0.0)), w, tol).unwrap());
        }
        let w = Window::new(0.01, 8.0).unwrap();
        let g = center_distance(&example_matrix(), 4.005).unwrap();
        assert!((g - 2.2405).abs() < 1e-4, "{g}");
        assert!(accretive_via_disk(&example_matrix(), w, tol).unwrap());
        assert!(is_accretive(&transform_c(&example_matrix(), w), tol).unwrap());
        assert!(!accretive_via_disk(&jordan(), Window::new(1.0, 2.0).unwrap(), tol).unwrap());
    }

    #[test]
    fn example_center_distance_closed_form() {
        // A − 4.005 I = [[-2.005, 0], [-1, -0.005]]; σ_max from the 2x2 Gram matrix.
        let (a, b, d) = (-2.005f64, -1.0f64, -0.005f64);
        let t = a * a + b * b + d * d;
        let det = (a * d).powi(2);
        let smax = ((t + (t * t - 4.0 * det).sqrt()) / 2.0).sqrt();
        assert!((center_distance(&example_matrix(), 4.005).unwrap() - smax).abs() < 1e-13);
    }

    #[test]
    fn identity_residual_examples() {
        let w = Window::new(1.0, 3.0).unwrap();
        assert!(identity_residual(&Matrix::zeros(2), w).unwrap() < 1e-14);
        let w = Window::new(4.0, 50.0).unwrap();
        let res = identity_residual(&remark_matrix(), w).unwrap();
        assert!(res <= 1e-10 * (w.radius().powi(2)), "{res}");
    }

    #[test]
    fn props_on_hermitian_input() {
        let h = HermitianMatrix::symmetrize(&remark_matrix()).into_matrix();
        let v = prop_self_adjoint(&h, Window::new(1.0, 3.0).unwrap(), Tolerance::default()).unwrap();
        assert!(v.pass);
        assert_eq!(v.details["skew_norm"].as_f64().unwrap(), 0.0);
    }

    #[test]
    fn prop_abs_band_examples() {
        let tol = Tolerance::default();
        let v = prop_abs_band(&Matrix::diag_real(&[1.0, 2.0]), Window::new(0.5, 3.0).unwrap(), tol).unwrap();
        assert!(v.pass && v.details["left"] == true && v.details["right"] == true);
        let v = prop_abs_band(&jordan(), Window::new(1.0, 2.0).unwrap(), tol).unwrap();
        assert!(v.pass && v.details["left"] == false && v.details["right"] == false);
    }

    #[test]
    fn prop_six_hypothesis_gate() {
        let tol = Tolerance::default();
        let v = prop_accretive_implies(&jordan(), Window::new(1.0, 2.0).unwrap(), tol).unwrap();
        assert_eq!(v.status, Status::HypothesisNotMet);
        // A = I is accretive but C_{3,2}(I) = (3 − 1)(1 − 2) I = −2I is not.
        let v = prop_accretive_implies(&Matrix::identity(2), Window::new(2.0, 3.0).unwrap(), tol).unwrap();
        assert!(!v.hypothesis_met);
        assert_eq!(v.informational_failures(), 1);
        let v = prop_accretive_implies(&example_matrix(), Window::new(0.01, 8.0).unwrap(), tol).unwrap();
        assert!(v.pass);
    }

    #[test]
    fn prop_checks_on_remark_matrix() {
        let vs = prop_checks(&remark_matrix(), Window::new(4.0, 50.0).unwrap(), Tolerance::default()).unwrap();
        assert_eq!(vs.len(), 7);
        let ids: Vec<&str> = vs.iter().map(|v| v.case_id.as_str()).collect();
        assert_eq!(ids, ["prop.1", "prop.2", "prop.3", "prop.4", "prop.5", "prop.6", "prop.7"]);
        for v in &vs {
            assert!(v.pass || !v.hypothesis_met, "{}", v.to_json());
        }
    }
}
