//! Registry of every checked inequality and a single dispatch point.

pub mod maps;
mod operator;
mod radius;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance};
use crate::numrad::DEFAULT_EPS;
use crate::transform::{self, accretive_via_disk, Window};
use crate::verdict::{Relation, Verdict};
use crate::window::Variant;

pub use maps::{PositiveMapSpec, TradeParam};
pub use operator::*;
pub use radius::*;

pub(crate) enum Gate {
    Met(Matrix),
    NotMet(Verdict),
}

/// Applies the hypothesis "`C_{M,m}(X)` is accretive" for `X = variant.image(A)`.
pub(crate) fn gate(id: &str, relation: Relation, a: &Matrix, variant: Variant, w: Window, tol: Tolerance) -> Result<Gate> {
    let x = match variant.image(a) {
        Ok(x) => x,
        Err(e @ (Error::Singular { .. } | Error::IllConditioned { .. })) => {
            return Ok(Gate::NotMet(Verdict::not_met(id, relation, format!("A is not invertible: {e}"))))
        }
        Err(e) => return Err(e),
    };
    if accretive_via_disk(&x, w, tol)? {
        Ok(Gate::Met(x))
    } else {
        let label = match variant {
            Variant::A => "A".to_string(),
            other => other.tag().to_string(),
        };
        Ok(Gate::NotMet(Verdict::not_met(id, relation, format!("C_{{M,m}}({label}) is not accretive"))))
    }
}

/// Inputs of one check. `a` is always present; the other fields are used by
/// the cases that need them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Instance {
    pub a: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<Window>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window_b: Option<Window>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<TradeParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<PositiveMapSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aux_seed: Option<u64>,
}

impl Instance {
    pub fn new(a: Matrix) -> Self {
        Self { a, b: None, window: None, window_b: None, t: None, map: None, alpha: None, aux_seed: None }
    }

    pub fn with_window(mut self, w: Window) -> Self {
        self.window = Some(w);
        self
    }

    pub fn with_b(mut self, b: Matrix) -> Self {
        self.b = Some(b);
        self
    }

    fn window(&self, id: &str) -> Result<Window> {
        self.window.ok_or_else(|| Error::InvalidParameter(format!("{id} needs a window (m, M)")))
    }

    fn b(&self, id: &str) -> Result<&Matrix> {
        self.b.as_ref().ok_or_else(|| Error::InvalidParameter(format!("{id} needs a second matrix B")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub tol: Tolerance,
    /// Absolute target width of numerical-radius enclosures, relative to `max(1, ‖A‖)`.
    pub eps: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { tol: Tolerance::default(), eps: DEFAULT_EPS }
    }
}

/// Extra inputs a case reads besides `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Needs {
    pub window: bool,
    pub b: bool,
    pub window_b: bool,
    pub map: bool,
    pub alpha: bool,
}

const W: Needs = Needs { window: true, b: false, window_b: false, map: false, alpha: false };
const WB: Needs = Needs { window: true, b: true, window_b: false, map: false, alpha: false };
const NONE: Needs = Needs { window: false, b: false, window_b: false, map: false, alpha: false };

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CaseInfo {
    pub id: &'static str,
    pub relation: Relation,
    pub statement: &'static str,
    pub hypothesis: &'static str,
    pub needs: Needs,
}

const fn case(id: &'static str, relation: Relation, statement: &'static str, hypothesis: &'static str, needs: Needs) -> CaseInfo {
    CaseInfo { id, relation, statement, hypothesis, needs }
}

use Relation::{Equivalence as Eqv, Loewner as Lw, Scalar as Sc};

const ACC_A: &str = "C_{M,m}(A) accretive";
const ACC_IASTAR: &str = "C_{M,m}(iA*) accretive";
const ACC_AINV: &str = "C_{M,m}(A^-1) accretive";
const ACC_BOTH: &str = "C_{M,m}(A) and C_{M,m}(iA*) accretive";
const ACC_ABS: &str = "C_{M,m}(|X|) accretive";

pub const CASES: &[CaseInfo] = &[
    case("prop.1", Eqv, "C(A*) = C*(A) iff A is normal", "none", W),
    case("prop.2", Eqv, "C(A) self-adjoint iff A self-adjoint", "none", W),
    case("prop.3", Eqv, "C(|A|) accretive iff sigma(A) in [m, M]", "none", W),
    case("prop.4", Lw, "Re C(A) <= ((M-m)/2)^2 I and C accretive iff ||A - mu|| <= r", "none", W),
    case("prop.5", Lw, "Im C(A) = (M-m) Im A", "none", W),
    case("prop.6", Eqv, "C(A) accretive implies Re A positive definite", ACC_A, W),
    case("prop.7", Eqv, "C(A) accretive and C(iA) dissipative relations", ACC_A, W),
    case("thm.abs_real.a", Lw, "|A| <= K Re A", ACC_A, W),
    case("thm.abs_real.iastar", Lw, "|A*| <= K Im A", ACC_IASTAR, W),
    case("thm.abs_real.ainv", Lw, "|A^-1| <= K Re A^-1", ACC_AINV, W),
    case("eq.intermediate", Lw, "Mm I + |A|^2 <= (M+m) Re A", ACC_A, W),
    case("thm.block_triangle", Sc, "||S|| + ||T|| + | ||S|| - ||T|| | <= K ||S + T||", "C_{M,m}([[0,S],[T*,0]]) accretive", WB),
    case("cor.abs_minus_real.a", Lw, "|A| - Re A <= c1 ||A|| I", ACC_A, W),
    case("cor.abs_minus_real.iastar", Lw, "|A*| - Im A <= c1 ||A|| I", ACC_IASTAR, W),
    case("cor.abs_minus_real.ainv", Lw, "|A^-1| - Re A^-1 <= c1 ||A^-1|| I", ACC_AINV, W),
    case("thm.convex_combo", Lw, "(1-t)|A*| + t|A| <= K((1-t) Im A + t Re A)", ACC_BOTH, W),
    case("thm.squared.a", Lw, "|A|^2 <= K^2 (Re A)^2", ACC_A, W),
    case("thm.squared.iastar", Lw, "|A*|^2 <= K^2 (Im A)^2", ACC_IASTAR, W),
    case("thm.squared.ainv", Lw, "|A^-1|^2 <= K^2 (Re A^-1)^2", ACC_AINV, W),
    case("lem.sqrt_equiv", Eqv, "X <= alpha Y iff ||X^1/2 Y^-1/2|| <= sqrt(alpha)", "X PSD, Y positive definite", Needs { window: false, b: true, window_b: false, map: false, alpha: true }),
    case("cor.anticommutator.a", Lw, "| |A| (Re A)^-1 + (Re A)^-1 |A| | <= (M+m)/sqrt(Mm) I", ACC_A, W),
    case("cor.anticommutator.iastar", Lw, "| |A*| (Im A)^-1 + (Im A)^-1 |A*| | <= (M+m)/sqrt(Mm) I", ACC_IASTAR, W),
    case("rem.sandwich", Lw, "(2 sqrt(Mm)/(M+m))^2 |A|^2 <= (Re A)^2", ACC_A, W),
    case("lem.posmap", Lw, "Phi(|A|^2)^1/2 <= K Phi(|A|)", "C_{M,m}(|A|) accretive, Phi unital positive", Needs { window: true, b: false, window_b: false, map: true, alpha: false }),
    case("ineq.posmap_reverse", Lw, "Phi(|A|) <= Phi(|A|^2)^1/2", "Phi unital positive", Needs { window: false, b: false, window_b: false, map: true, alpha: false }),
    case("thm.reverse.a", Lw, "Re A <= K |A|", ACC_ABS, W),
    case("thm.reverse.iastar", Lw, "Im A <= K |A*|", ACC_ABS, W),
    case("thm.reverse.ainv", Lw, "Re A^-1 <= K |A^-1|", ACC_ABS, W),
    case("cor.real_minus_abs.a", Lw, "Re A - |A| <= (K-1) ||A|| I", ACC_ABS, W),
    case("cor.real_minus_abs.iastar", Lw, "Im A - |A*| <= (K-1) ||A|| I", ACC_ABS, W),
    case("w.basic_bounds", Sc, "||A||/2 <= w(A) <= ||A||, ||Re A||, ||Im A|| <= w(A)", "none", NONE),
    case("w.vs_real", Sc, "w(A) <= K ||Re A||", ACC_A, W),
    case("norm.vs_w", Sc, "||A|| <= K w(A)", ACC_A, W),
    case("w.geo_mean", Sc, "w(A) <= K sqrt(||Re A|| ||Im A||)", ACC_BOTH, W),
    case("w.lower_sq", Sc, "2Mm/(M+m)^2 || |A|^2 + |A*|^2 || <= w(A)^2", ACC_A, W),
    case("w.product", Sc, "w(AB) <= K_A K_B w(A) w(B)", "C_{M,m}(A) and C_{N,n}(B) accretive", Needs { window: true, b: true, window_b: true, map: false, alpha: false }),
    case("w.commutator.minus", Sc, "w(AB - BA*) <= (M-m) w(B)", ACC_A, WB),
    case("w.commutator.plus", Sc, "w(AB + BA*) <= (M-m) w(B)", "C_{M,m}(iA) accretive", WB),
    case("cor.final", Sc, "w(AB) + |w(AB + B*A) - w(AB - B*A)|/2 <= (M-m) w(B)", "C_{M,m}(A) and C_{M,m}(iA) accretive", WB),
    case("prop.mixed_schwarz", Sc, "|<Ax, x>| <= sqrt(<|A|x, x> <|A*|x, x>)", "none", NONE),
    case("prop.norm_product", Sc, "||XY|| <= ||X + Y||^2 / 4", "X, Y PSD", Needs { window: false, b: true, window_b: false, map: false, alpha: false }),
];

pub fn case_info(id: &str) -> Option<&'static CaseInfo> {
    CASES.iter().find(|c| c.id == id)
}

fn variant_of(id: &str) -> Variant {
    match id.rsplit('.').next() {
        Some("iastar") => Variant::IAStar,
        Some("ainv") => Variant::AInv,
        _ => Variant::A,
    }
}

/// Evaluates one case on one instance.
pub fn evaluate(case_id: &str, inst: &Instance, cfg: &CheckConfig) -> Result<Verdict> {
    let info = case_info(case_id).ok_or_else(|| Error::UnknownCase(case_id.to_string()))?;
    let (a, tol, eps) = (&inst.a, cfg.tol, cfg.eps);
    let id = info.id;
    let variant = variant_of(id);
    let seed = inst.aux_seed.unwrap_or(0);
    match id {
        "prop.1" => transform::prop_normal(a, inst.window(id)?, tol),
        "prop.2" => transform::prop_self_adjoint(a, inst.window(id)?, tol),
        "prop.3" => transform::prop_abs_band(a, inst.window(id)?, tol),
        "prop.4" => transform::prop_upper_bound(a, inst.window(id)?, tol),
        "prop.5" => transform::prop_imaginary(a, inst.window(id)?, tol),
        "prop.6" => transform::prop_accretive_implies(a, inst.window(id)?, tol),
        "prop.7" => transform::prop_accretive_dissipative(a, inst.window(id)?, tol),
        "eq.intermediate" => check_intermediate(a, inst.window(id)?, tol),
        "thm.block_triangle" => check_block_reverse_triangle(a, inst.b(id)?, inst.window(id)?, tol),
        "thm.convex_combo" => match inst.t {
            Some(t) => check_convex_combo(a, inst.window(id)?, t, tol),
            None => check_convex_combo_grid(a, inst.window(id)?, tol),
        },
        "lem.sqrt_equiv" => {
            let alpha = inst.alpha.ok_or_else(|| Error::InvalidParameter("lem.sqrt_equiv needs alpha".into()))?;
            check_sqrt_equiv(a, inst.b(id)?, alpha, tol)
        }
        "rem.sandwich" => check_sandwich(a, inst.window(id)?, tol),
        "lem.posmap" | "ineq.posmap_reverse" => {
            let map = inst.map.as_ref().ok_or_else(|| Error::InvalidParameter(format!("{id} needs a positive map")))?;
            // the reverse inequality ignores the window
            let w = match (id, inst.window) {
                (_, Some(w)) => w,
                ("ineq.posmap_reverse", None) => Window::new(1.0, 2.0)?,
                _ => inst.window(id)?,
            };
            let (lemma, reverse) = check_positive_map(a, w, map, tol)?;
            Ok(if id == "lem.posmap" { lemma } else { reverse })
        }
        "w.basic_bounds" => check_basic_bounds(a, eps, tol),
        "w.vs_real" | "norm.vs_w" => {
            let (vr, vw) = check_w_bounds(a, inst.window(id)?, eps, tol)?;
            Ok(if id == "w.vs_real" { vr } else { vw })
        }
        "w.geo_mean" => check_w_geo_mean(a, inst.window(id)?, eps, seed, tol),
        "w.lower_sq" => check_w_lower_sq(a, inst.window(id)?, eps, tol),
        "w.product" => {
            let wb = inst.window_b.ok_or_else(|| Error::InvalidParameter("w.product needs a second window (n, N)".into()))?;
            check_w_product(a, inst.b(id)?, inst.window(id)?, wb, eps, tol)
        }
        "w.commutator.minus" => check_w_commutator(a, inst.b(id)?, inst.window(id)?, CommutatorForm::Minus, eps, tol),
        "w.commutator.plus" => check_w_commutator(a, inst.b(id)?, inst.window(id)?, CommutatorForm::Plus, eps, tol),
        "cor.final" => check_final_corollary(a, inst.b(id)?, inst.window(id)?, eps, tol),
        "prop.mixed_schwarz" => check_mixed_schwarz(a, seed, SCHWARZ_VECTORS, tol),
        "prop.norm_product" => check_norm_product(a, inst.b(id)?, tol),
        _ if id.starts_with("thm.abs_real.") => check_abs_vs_real(a, inst.window(id)?, variant, tol),
        _ if id.starts_with("cor.abs_minus_real.") => check_abs_minus_real(a, inst.window(id)?, variant, tol),
        _ if id.starts_with("thm.squared.") => check_squared(a, inst.window(id)?, variant, tol),
        _ if id.starts_with("cor.anticommutator.") => check_anticommutator(a, inst.window(id)?, variant, tol),
        _ if id.starts_with("thm.reverse.") => check_reverse(a, inst.window(id)?, variant, tol),
        _ if id.starts_with("cor.real_minus_abs.") => check_real_minus_abs(a, inst.window(id)?, variant, tol),
        _ => Err(Error::UnknownCase(id.to_string())),
    }
}
