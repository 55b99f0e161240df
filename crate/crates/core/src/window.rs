//! Feasibility and optimization of `(m, M)` windows.
//!
//! For a fixed center `μ` the smallest admissible radius is `g(μ) = ‖X − μI‖`,
//! so the best Kantorovich ratio is `K(μ) = μ / √(μ² − g(μ)²) = 1/√(1 − φ²)`
//! with `φ = g(μ)/μ`. In the variable `s = 1/μ`,
//!
//! ```text
//! φ(s) = ‖sX − I‖
//! ```
//!
//! is convex, and `φ(s) ≥ s‖X‖ − 1` puts its minimizer in `[0, 2/‖X‖]`.
//! A window exists iff `min φ < 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, abs_adjoint, abs_op, Matrix, Tolerance, C64};
use crate::transform::{accretive_via_disk, center_distance, Window};

/// Inverses with `σ_max/σ_min` above this are refused.
pub const MAX_COND: f64 = 1e12;
const GOLDEN_MAX_ITER: usize = 200;
const GOLDEN_REL: f64 = 1e-12;
const DEGENERATE_REL: f64 = 1e-9;

/// Which matrix the window hypothesis is placed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "iAstar")]
    IAStar,
    #[serde(rename = "iA")]
    IA,
    #[serde(rename = "Ainv")]
    AInv,
    #[serde(rename = "absA")]
    AbsA,
    #[serde(rename = "absIAstar")]
    AbsIAStar,
}

impl Variant {
    pub const ALL: [Variant; 6] =
        [Variant::A, Variant::IAStar, Variant::IA, Variant::AInv, Variant::AbsA, Variant::AbsIAStar];

    pub fn tag(self) -> &'static str {
        match self {
            Variant::A => "A",
            Variant::IAStar => "iAstar",
            Variant::IA => "iA",
            Variant::AInv => "Ainv",
            Variant::AbsA => "absA",
            Variant::AbsIAStar => "absIAstar",
        }
    }

    /// The matrix whose transform must be accretive: `A`, `iA*`, `iA`, `A⁻¹`, `|A|` or `|iA*| = |A*|`.
    pub fn image(self, a: &Matrix) -> Result<Matrix> {
        let i = C64::new(0.0, 1.0);
        Ok(match self {
            Variant::A => a.clone(),
            Variant::IAStar => a.adjoint().scale(i),
            Variant::IA => a.scale(i),
            Variant::AInv => checked_inverse(a)?,
            Variant::AbsA => abs_op(a)?.into_matrix(),
            Variant::AbsIAStar => abs_adjoint(a)?.into_matrix(),
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown variant `{s}`")))
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// `A⁻¹`, refusing singular or badly conditioned input.
pub fn checked_inverse(a: &Matrix) -> Result<Matrix> {
    let sv = linalg::singular_values(a)?;
    let (smin, smax) = (sv[0], sv[sv.len() - 1]);
    if smin <= f64::EPSILON * smax.max(f64::MIN_POSITIVE) {
        return Err(Error::Singular { value: smin });
    }
    let cond = smax / smin;
    if cond > MAX_COND {
        return Err(Error::IllConditioned { cond });
    }
    linalg::inverse(a)
}

/// Whether the variant hypothesis holds for `A` on window `w`.
pub fn feasible_window(a: &Matrix, variant: Variant, w: Window, tol: Tolerance) -> Result<bool> {
    match variant {
        Variant::AbsA | Variant::AbsIAStar => {
            let sv = linalg::singular_values(a)?;
            let band = tol.abs(w.big_m());
            Ok(sv[0] >= w.m() - band && sv[sv.len() - 1] <= w.big_m() + band)
        }
        Variant::AInv => {
            let smin = linalg::singular_values(a)?[0];
            if smin <= tol.rel {
                return Err(Error::Singular { value: smin });
            }
            accretive_via_disk(&variant.image(a)?, w, tol)
        }
        _ => accretive_via_disk(&variant.image(a)?, w, tol),
    }
}

/// What `optimal_window` minimizes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Kantorovich ratio `K`.
    #[default]
    Kantorovich,
    /// Window width `M − m`.
    Diameter,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowSearchResult {
    pub variant: Variant,
    pub objective: Objective,
    pub feasible: bool,
    pub window: Option<Window>,
    #[serde(rename = "K")]
    pub k: Option<f64>,
    pub mu_star: f64,
    pub g_star: f64,
    pub pad: f64,
}

fn golden_min(mut lo: f64, mut hi: f64, width: f64, f: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..GOLDEN_MAX_ITER {
        if hi - lo <= width {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Best window for the variant image of `A`; `r = g(μ*)·(1 + pad)`.
pub fn optimal_window(a: &Matrix, variant: Variant, pad: f64, objective: Objective) -> Result<WindowSearchResult> {
    if !(pad >= 0.0 && pad.is_finite()) {
        return Err(Error::InvalidParameter(format!("pad must be a finite non-negative number, got {pad}")));
    }
    let x = variant.image(a)?;
    let norm = linalg::spectral_norm(&x)?;
    let infeasible = |mu: f64, g: f64| WindowSearchResult {
        variant,
        objective,
        feasible: false,
        window: None,
        k: None,
        mu_star: mu,
        g_star: g,
        pad,
    };
    if norm == 0.0 {
        return Ok(infeasible(0.0, 0.0));
    }

    let (mu, g) = match objective {
        Objective::Kantorovich => {
            let phi = |s: f64| linalg::spectral_norm(&x.scale_real(s).shift(C64::new(-1.0, 0.0)));
            let s_hi = 2.0 / norm;
            let (s, phi_s) = golden_min(0.0, s_hi, GOLDEN_REL * s_hi, phi)?;
            if !(phi_s < 1.0) || s <= 0.0 {
                return Ok(infeasible(f64::INFINITY, f64::INFINITY));
            }
            let mu = 1.0 / s;
            (mu, center_distance(&x, mu)?)
        }
        Objective::Diameter => {
            let bound = 2.0 * norm;
            let (mu, g) = golden_min(-bound, bound, GOLDEN_REL * bound.max(1.0), |mu| center_distance(&x, mu))?;
            (mu, g)
        }
    };
    if !(mu - g > 0.0) {
        return Ok(infeasible(mu, g));
    }
    let r = g * (1.0 + pad);
    if 2.0 * r < DEGENERATE_REL * mu.max(1.0) {
        return Err(Error::Degenerate(format!(
            "optimal radius {r:e} at center {mu} leaves no window (image is a multiple of the identity)"
        )));
    }
    if r >= mu {
        return Err(Error::InvalidParameter(format!("pad {pad} pushes m = μ − r below zero")));
    }
    let window = Window::from_center(mu, r)?;
    Ok(WindowSearchResult {
        variant,
        objective,
        feasible: true,
        window: Some(window),
        k: Some(window.kantorovich()),
        mu_star: mu,
        g_star: g,
        pad,
    })
}

/// The two disk conditions behind "`C(A)` and `C(iA*)` are accretive".
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiaccretiveCheck {
    /// `‖A − μI‖`.
    pub dist_a: f64,
    /// `‖A − iμI‖ = ‖iA* − μI‖`.
    pub dist_second: f64,
    pub radius: f64,
    pub first: bool,
    pub second: bool,
}

impl BiaccretiveCheck {
    pub fn holds(&self) -> bool {
        self.first && self.second
    }
}

fn two_disks(a: &Matrix, w: Window, second_center: C64, tol: Tolerance) -> Result<BiaccretiveCheck> {
    let r = w.radius();
    let bound = r + tol.abs(r);
    let dist_a = center_distance(a, w.center())?;
    let dist_second = linalg::spectral_norm(&a.shift(-second_center))?;
    Ok(BiaccretiveCheck { dist_a, dist_second, radius: r, first: dist_a <= bound, second: dist_second <= bound })
}

/// `C(A)` and `C(iA*)` accretive, i.e. `‖A − μI‖ ≤ r` and `‖A − iμI‖ ≤ r`.
pub fn biaccretive_feasible(a: &Matrix, w: Window, tol: Tolerance) -> Result<BiaccretiveCheck> {
    two_disks(a, w, C64::new(0.0, w.center()), tol)
}

/// `C(A)` and `C(iA)` accretive, i.e. `‖A − μI‖ ≤ r` and `‖A + iμI‖ ≤ r`.
pub fn accretive_with_ia(a: &Matrix, w: Window, tol: Tolerance) -> Result<BiaccretiveCheck> {
    two_disks(a, w, C64::new(0.0, -w.center()), tol)
}
