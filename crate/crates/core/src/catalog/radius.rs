//! Numerical-radius inequalities. Every `ω` is an enclosure; the upper end is
//! used where `ω` makes the left side larger and the lower end where it makes
//! the right side larger, so a pass never rests on enclosure error.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::harness::generators::random_unit_vector;
use crate::linalg::{self, abs_adjoint, abs_op, abs_sq, hermitian_part, imaginary_part, Matrix, Tolerance};
use crate::numrad::{self, numerical_radius, Enclosure};
use crate::transform::Window;
use crate::verdict::{Relation, Verdict};
use crate::window::{accretive_with_ia, biaccretive_feasible, Variant};

use super::{gate, Gate};

pub const SCHWARZ_VECTORS: usize = 100;
/// Relative width of the band in which the two forms of an improvement condition may disagree.
pub const IMPROVEMENT_BAND: f64 = 1e-12;

fn enclosure_detail(e: Enclosure) -> serde_json::Value {
    serde_json::json!([e.lo, e.hi])
}

/// `‖A‖/2 ≤ ω`, `ω ≤ ‖A‖`, `‖ℜA‖ ≤ ω`, `‖ℑA‖ ≤ ω`.
pub fn check_basic_bounds(a: &Matrix, eps: f64, tol: Tolerance) -> Result<Verdict> {
    let w = numerical_radius(a, eps)?;
    let parts = numrad::basic_bounds_with(a, w, tol)?;
    Ok(Verdict::conjunction("w.basic_bounds", parts).with_detail("omega", enclosure_detail(w)))
}

/// `ω ≤ K‖ℜA‖`, `ω − ‖ℜA‖ ≤ c1 ω` (`w.vs_real`) and `‖A‖ ≤ Kω`,
/// `‖A‖ − ω ≤ c1‖A‖` (`norm.vs_w`), under `C(A)` accretive.
pub fn check_w_bounds(a: &Matrix, w: Window, eps: f64, tol: Tolerance) -> Result<(Verdict, Verdict)> {
    let x = match gate("w.vs_real", Relation::Scalar, a, Variant::A, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => {
            let mut other = v.clone();
            other.case_id = "norm.vs_w".into();
            return Ok((v, other));
        }
    };
    let om = numerical_radius(&x, eps)?;
    let c = w.constants();
    let re = linalg::hermitian_norm(&hermitian_part(&x))?;
    let norm = linalg::spectral_norm(&x)?;
    let (hi, lo) = (om.small_side(), om.large_side());

    // both sides of the difference forms are monotone in ω, so one end suffices
    let vs_real = Verdict::conjunction(
        "w.vs_real",
        vec![
            Verdict::scalar("w.vs_real.ratio", hi, c.k * re, tol),
            Verdict::scalar("w.vs_real.difference", hi - re, c.c1 * hi, tol),
        ],
    )
    .with_detail("omega", enclosure_detail(om));
    let vs_w = Verdict::conjunction(
        "norm.vs_w",
        vec![
            Verdict::scalar("norm.vs_w.ratio", norm, c.k * lo, tol),
            Verdict::scalar("norm.vs_w.difference", norm - lo, c.c1 * norm, tol),
        ],
    )
    .with_detail("omega", enclosure_detail(om))
    .with_detail("refines_half_norm_bound", c.k < 2.0)
    .with_detail("lower_bound_low_k_norm", c.low_k * norm)
    .with_detail("lower_bound_half_norm", 0.5 * norm);
    Ok((vs_real, vs_w))
}

/// `|⟨Ax, x⟩| ≤ √(⟨|A|x, x⟩⟨|A*|x, x⟩)` on random unit vectors; reports the tightest one.
pub fn check_mixed_schwarz(a: &Matrix, seed: u64, count: usize, tol: Tolerance) -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = abs_op(a)?;
    let q = abs_adjoint(a)?;
    let n = a.dim();
    let mut worst: Option<Verdict> = None;
    for _ in 0..count.max(1) {
        let x = random_unit_vector(&mut rng, n);
        let lhs = a.quadratic_form(&x).norm();
        let rhs = (p.quadratic_form(&x).re.max(0.0) * q.quadratic_form(&x).re.max(0.0)).sqrt();
        let v = Verdict::scalar("prop.mixed_schwarz", lhs, rhs, tol);
        if worst.as_ref().is_none_or(|w| v.normalized_slack < w.normalized_slack) {
            worst = Some(v);
        }
    }
    Ok(worst.expect("at least one vector").with_detail("vectors", count.max(1)))
}

/// `ω(A) ≤ K √(‖ℜA‖‖ℑA‖)` under `C(A)`, `C(iA*)` accretive.
pub fn check_w_geo_mean(a: &Matrix, w: Window, eps: f64, seed: u64, tol: Tolerance) -> Result<Verdict> {
    let id = "w.geo_mean";
    let bi = biaccretive_feasible(a, w, tol)?;
    if !bi.holds() {
        return Ok(Verdict::not_met(id, Relation::Scalar, "C_{M,m}(A) and C_{M,m}(iA*) are not both accretive")
            .with_detail("c_a_accretive", bi.first)
            .with_detail("c_iastar_accretive", bi.second));
    }
    let om = numerical_radius(a, eps)?;
    let re = linalg::hermitian_norm(&hermitian_part(a))?;
    let im = linalg::hermitian_norm(&imaginary_part(a))?;
    let rhs = w.kantorovich() * (re * im).sqrt();
    Ok(Verdict::scalar(id, om.small_side(), rhs, tol)
        .with_detail("omega", enclosure_detail(om))
        .with_part(check_mixed_schwarz(a, seed, SCHWARZ_VECTORS, tol)?))
}

/// The two algebraic forms of an improvement condition and whether the
/// instance sits in the band where rounding may separate them.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImprovementForms {
    pub first: bool,
    pub second: bool,
    pub boundary: bool,
}

impl ImprovementForms {
    pub fn agree(&self) -> bool {
        self.first == self.second || self.boundary
    }

    fn verdict(&self, id: &str) -> Verdict {
        Verdict::equivalence(id, self.first, self.second, self.boundary, 0.0)
    }
}

/// `Mm ≥ ¼(M−m)²` versus `M/m ≤ 3 + 2√2`.
pub fn lower_sq_improvement(w: Window) -> ImprovementForms {
    let (m, big_m) = (w.m(), w.big_m());
    let product = m * big_m;
    let quarter = 0.25 * (big_m - m).powi(2);
    let ratio = big_m / m;
    let root = 3.0 + 2.0 * 2f64.sqrt();
    ImprovementForms {
        first: product >= quarter,
        second: ratio <= root,
        boundary: (product - quarter).abs() <= IMPROVEMENT_BAND * product
            || (ratio - root).abs() <= IMPROVEMENT_BAND * root,
    }
}

/// `K_A·K_B < 4` versus `(√(MN) − √(mn))² + (√(Mn) − √(Nm))² ≤ 12√(MNmn)`.
pub fn product_improvement(wa: Window, wb: Window) -> ImprovementForms {
    let (m, big_m, n, big_n) = (wa.m(), wa.big_m(), wb.m(), wb.big_m());
    let kk = wa.kantorovich() * wb.kantorovich();
    let g = (big_m * big_n * m * n).sqrt();
    let lhs = ((big_m * big_n).sqrt() - (m * n).sqrt()).powi(2) + ((big_m * n).sqrt() - (big_n * m).sqrt()).powi(2);
    ImprovementForms {
        first: kk < 4.0,
        second: lhs <= 12.0 * g,
        boundary: (kk - 4.0).abs() <= IMPROVEMENT_BAND * 4.0 || (lhs - 12.0 * g).abs() <= IMPROVEMENT_BAND * 12.0 * g,
    }
}

/// `2Mm/(M+m)² ‖|A|² + |A*|²‖ ≤ ω²(A)` under `C(A)` accretive.
pub fn check_w_lower_sq(a: &Matrix, w: Window, eps: f64, tol: Tolerance) -> Result<Verdict> {
    let id = "w.lower_sq";
    let x = match gate(id, Relation::Scalar, a, Variant::A, w, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let om = numerical_radius(&x, eps)?;
    let sum = abs_sq(&x).add(&linalg::HermitianMatrix::symmetrize(&x.matmul(&x.adjoint())));
    let sq = w.constants().sq;
    let lhs = sq * linalg::hermitian_norm(&sum)?;
    let lo = om.large_side();
    let forms = lower_sq_improvement(w);
    Ok(Verdict::scalar(id, lhs, lo * lo, tol)
        .with_detail("omega", enclosure_detail(om))
        .with_detail("sq", sq)
        .with_detail("improves_quarter_bound", sq > 0.25)
        .with_part(forms.verdict("w.lower_sq.improvement_forms")))
}

/// `ω(AB) ≤ K_A K_B ω(A) ω(B)` under `C_{M,m}(A)`, `C_{N,n}(B)` accretive.
pub fn check_w_product(a: &Matrix, b: &Matrix, wa: Window, wb: Window, eps: f64, tol: Tolerance) -> Result<Verdict> {
    let id = "w.product";
    let xa = match gate(id, Relation::Scalar, a, Variant::A, wa, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v),
    };
    let xb = match gate(id, Relation::Scalar, b, Variant::A, wb, tol)? {
        Gate::Met(x) => x,
        Gate::NotMet(v) => return Ok(v.with_detail("factor", "B")),
    };
    let oab = numerical_radius(&xa.matmul(&xb), eps)?;
    let oa = numerical_radius(&xa, eps)?;
    let ob = numerical_radius(&xb, eps)?;
    let kk = wa.kantorovich() * wb.kantorovich();
    let forms = product_improvement(wa, wb);
    Ok(Verdict::scalar(id, oab.small_side(), kk * oa.large_side() * ob.large_side(), tol)
        .with_detail("omega_ab", enclosure_detail(oab))
        .with_detail("omega_a", enclosure_detail(oa))
        .with_detail("omega_b", enclosure_detail(ob))
        .with_detail("k_product", kk)
        .with_detail("improves_factor_four", kk < 4.0)
        .with_part(forms.verdict("w.product.improvement_forms")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommutatorForm {
    Minus,
    Plus,
}

/// `minus`: `ω(AB − BA*) ≤ (M−m) ω(B)` under `C(A)` accretive.
///
/// `plus`: under `C(iA)` accretive, `ω(AB + BA*) ≤ (M−m) ω(B)`, which is what
/// replacing `A` by `iA` in the `minus` form yields. The form `ω(AB + B*A)` is
/// reported as an informational part; it fails already for `A = −iμI`, `B = I`.
pub fn check_w_commutator(
    a: &Matrix,
    b: &Matrix,
    w: Window,
    form: CommutatorForm,
    eps: f64,
    tol: Tolerance,
) -> Result<Verdict> {
    let (id, variant) = match form {
        CommutatorForm::Minus => ("w.commutator.minus", Variant::A),
        CommutatorForm::Plus => ("w.commutator.plus", Variant::IA),
    };
    if let Gate::NotMet(v) = gate(id, Relation::Scalar, a, variant, w, tol)? {
        return Ok(v);
    }
    let ab = a.matmul(b);
    let ba_star = b.matmul(&a.adjoint());
    let combo = match form {
        CommutatorForm::Minus => &ab - &ba_star,
        CommutatorForm::Plus => &ab + &ba_star,
    };
    let oc = numerical_radius(&combo, eps)?;
    let ob = numerical_radius(b, eps)?;
    let diff = w.big_m() - w.m();
    let rhs = diff * ob.large_side();
    let norm_a = linalg::spectral_norm(a)?;
    let mut v = Verdict::scalar(id, oc.small_side(), rhs, tol)
        .with_detail("omega_combination", enclosure_detail(oc))
        .with_detail("omega_b", enclosure_detail(ob))
        .with_detail("baseline", 2.0 * norm_a * ob.small_side())
        .with_detail("improvement_margin", 2.0 * norm_a - diff);
    if form == CommutatorForm::Plus {
        let literal = &ab + &b.adjoint().matmul(a);
        let ol = numerical_radius(&literal, eps)?;
        v = v.with_info(
            Verdict::scalar("w.commutator.plus.adjoint_left", ol.small_side(), rhs, tol)
                .with_detail("omega", enclosure_detail(ol)),
        );
    }
    Ok(v)
}

/// `ω(AB) + ½|ω(AB + B*A) − ω(AB − B*A)| ≤ (M−m) ω(B)` under `C(A)`, `C(iA)` accretive.
pub fn check_final_corollary(a: &Matrix, b: &Matrix, w: Window, eps: f64, tol: Tolerance) -> Result<Verdict> {
    let id = "cor.final";
    let pair = accretive_with_ia(a, w, tol)?;
    if !pair.holds() {
        return Ok(Verdict::not_met(id, Relation::Scalar, "C_{M,m}(A) and C_{M,m}(iA) are not both accretive")
            .with_detail("c_a_accretive", pair.first)
            .with_detail("c_ia_accretive", pair.second));
    }
    let ab = a.matmul(b);
    let b_star_a = b.adjoint().matmul(a);
    let ba_star = b.matmul(&a.adjoint());
    let o_ab = numerical_radius(&ab, eps)?;
    let o_plus = numerical_radius(&(&ab + &b_star_a), eps)?;
    let o_minus = numerical_radius(&(&ab - &b_star_a), eps)?;
    let o_b = numerical_radius(b, eps)?;
    let gap = (o_plus.hi - o_minus.lo).abs().max((o_minus.hi - o_plus.lo).abs());
    let lhs = o_ab.small_side() + 0.5 * gap;
    let diff = w.big_m() - w.m();
    let rhs = diff * o_b.large_side();

    let p_plus = numerical_radius(&(&ab + &ba_star), eps)?;
    let p_minus = numerical_radius(&(&ab - &ba_star), eps)?;
    let proof_max = p_plus.small_side().max(p_minus.small_side());
    Ok(Verdict::scalar(id, lhs, rhs, tol)
        .with_detail("omega_ab", enclosure_detail(o_ab))
        .with_detail("omega_plus", enclosure_detail(o_plus))
        .with_detail("omega_minus", enclosure_detail(o_minus))
        .with_detail("omega_b", enclosure_detail(o_b))
        .with_detail("max_plus_minus", o_plus.hi.max(o_minus.hi))
        .with_part(Verdict::scalar("cor.final.substituted_forms", proof_max, rhs, tol)))
}
