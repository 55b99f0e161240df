//! Certified numerical radius and boundary samples of the numerical range.
//!
//! `ω(A) = max_θ f(θ)` with `f(θ) = λ_max(ℜ(e^{iθ}A))`, the support function
//! of `W(A)` in direction `e^{−iθ}`. On an interval `[a, b]` two upper bounds
//! for `f` are available:
//!
//! * Lipschitz: `f ≤ (f(a) + f(b))/2 + ‖A‖(b − a)/2`;
//! * sublinearity of the support function: every direction between the two
//!   endpoints is a non-negative combination of them, so with `δ = b − a`
//!
//!   ```text
//!   f(a + t) ≤ f(a) cos t + β sin t,    β = (f(b) − f(a) cos δ) / sin δ.
//!   ```
//!
//! The smaller of the two is the interval's potential. Branch-and-bound
//! bisects the interval of largest potential until the best potential is
//! within `eps · max(1, ‖A‖)` of the best evaluated value.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{self, hermitian_part, Matrix, Tolerance, C64};
use crate::verdict::Verdict;

pub const DEFAULT_EPS: f64 = 1e-8;
/// Requested widths below this are raised to it; eigenvalue errors dominate beyond.
pub const MIN_EPS: f64 = 1e-11;
const INITIAL_INTERVALS: usize = 64;
const MAX_EVALUATIONS: usize = 1_000_000;

/// Interval `[lo, hi]` containing `ω(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
}

impl Enclosure {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// The end to use where `ω` sits on the small side of `≤`.
    pub fn small_side(&self) -> f64 {
        self.hi
    }

    /// The end to use where `ω` sits on the large side of `≤`.
    pub fn large_side(&self) -> f64 {
        self.lo
    }

    pub fn contains(&self, x: f64, slack: f64) -> bool {
        self.lo - slack <= x && x <= self.hi + slack
    }
}

/// A boundary point of `W(A)`: `z = ⟨Ax, x⟩` for a top eigenvector `x` of `ℜ(e^{iθ}A)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RangePoint {
    pub theta: f64,
    pub z: C64,
}

fn rotated(a: &Matrix, theta: f64) -> linalg::HermitianMatrix {
    hermitian_part(&a.scale(C64::from_polar(1.0, theta)))
}

/// `λ_max(ℜ(e^{iθ}A))`.
pub fn rotated_real_max(a: &Matrix, theta: f64) -> Result<f64> {
    linalg::lambda_max(&rotated(a, theta))
}

#[derive(Debug)]
struct Region {
    potential: f64,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Region {}
impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Region {
    // Max-heap on potential; among equal potentials the smaller left endpoint comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.potential.total_cmp(&other.potential).then_with(|| other.a.total_cmp(&self.a))
    }
}

struct Bounder {
    lipschitz: f64,
    /// Eigenvalue error allowance added to every evaluated value.
    guard: f64,
}

impl Bounder {
    fn potential(&self, a: f64, b: f64, fa: f64, fb: f64) -> f64 {
        let delta = b - a;
        let (fa, fb) = (fa + self.guard, fb + self.guard);
        let lip = 0.5 * (fa + fb) + 0.5 * self.lipschitz * delta;
        // fb − fa cos δ = (fb − fa) + 2 fa sin²(δ/2), written without cancellation.
        let beta = (fb - fa) / delta.sin() + fa * (0.5 * delta).tan();
        let t0 = beta.atan2(fa);
        let wedge = if (0.0..=delta).contains(&t0) { fa.hypot(beta) } else { fa.max(fb) };
        let wedge = wedge + 4.0 * f64::EPSILON * (fa.abs() + beta.abs());
        lip.min(wedge)
    }
}

/// Certified enclosure of `ω(A)` with width at most `eps · max(1, ‖A‖)`.
///
/// `eps` below [`MIN_EPS`] is raised to it.
pub fn numerical_radius(a: &Matrix, eps: f64) -> Result<Enclosure> {
    let eps = if eps.is_finite() && eps > MIN_EPS { eps } else { MIN_EPS };
    let norm = linalg::spectral_norm(a)?;
    let scale = norm.max(1.0);
    let target = eps * scale;
    let bounder = Bounder {
        lipschitz: norm * (1.0 + 1e-12),
        guard: 2e-13 * (a.dim() as f64).sqrt() * scale,
    };

    let step = TAU / INITIAL_INTERVALS as f64;
    let mut values = Vec::with_capacity(INITIAL_INTERVALS + 1);
    for k in 0..INITIAL_INTERVALS {
        values.push(rotated_real_max(a, k as f64 * step)?);
    }
    values.push(values[0]);
    let mut lo = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let mut heap = BinaryHeap::with_capacity(4 * INITIAL_INTERVALS);
    for k in 0..INITIAL_INTERVALS {
        let (a0, b0) = (k as f64 * step, (k + 1) as f64 * step);
        let (fa, fb) = (values[k], values[k + 1]);
        heap.push(Region { potential: bounder.potential(a0, b0, fa, fb), a: a0, b: b0, fa, fb });
    }

    let mut evaluations = INITIAL_INTERVALS;
    loop {
        let top = heap.pop().expect("heap never empties");
        let hi = top.potential.max(lo);
        if hi - lo <= target || evaluations >= MAX_EVALUATIONS {
            return Ok(Enclosure { lo, hi });
        }
        let mid = 0.5 * (top.a + top.b);
        let fm = rotated_real_max(a, mid)?;
        evaluations += 1;
        lo = lo.max(fm);
        // Children never exceed the parent, so `hi` only decreases.
        let left = bounder.potential(top.a, mid, top.fa, fm).min(top.potential);
        let right = bounder.potential(mid, top.b, fm, top.fb).min(top.potential);
        heap.push(Region { potential: left, a: top.a, b: mid, fa: top.fa, fb: fm });
        heap.push(Region { potential: right, a: mid, b: top.b, fa: fm, fb: top.fb });
    }
}

/// `count` boundary points of `W(A)` on a uniform angle grid.
pub fn range_samples(a: &Matrix, count: usize) -> Result<Vec<RangePoint>> {
    let count = count.max(3);
    (0..count)
        .map(|k| {
            let theta = TAU * k as f64 / count as f64;
            let e = linalg::eig_hermitian(&rotated(a, theta))?;
            let x = e.vectors.column(a.dim() - 1);
            let norm2: f64 = x.iter().map(|z| z.norm_sqr()).sum();
            Ok(RangePoint { theta, z: a.quadratic_form(&x) / norm2 })
        })
        .collect()
}

/// `‖A‖/2 ≤ ω`, `ω ≤ ‖A‖`, `‖ℜA‖ ≤ ω`, `‖ℑA‖ ≤ ω`, with `ω` taken from the conservative end.
pub fn basic_bounds(a: &Matrix, eps: f64, tol: Tolerance) -> Result<Vec<Verdict>> {
    let w = numerical_radius(a, eps)?;
    basic_bounds_with(a, w, tol)
}

pub fn basic_bounds_with(a: &Matrix, w: Enclosure, tol: Tolerance) -> Result<Vec<Verdict>> {
    let norm = linalg::spectral_norm(a)?;
    let re = linalg::hermitian_norm(&hermitian_part(a))?;
    let im = linalg::hermitian_norm(&linalg::imaginary_part(a))?;
    let lo = w.large_side();
    let hi = w.small_side();
    Ok(vec![
        Verdict::scalar("w.basic_bounds.half_norm", 0.5 * norm, lo, tol),
        Verdict::scalar("w.basic_bounds.norm", hi, norm, tol),
        Verdict::scalar("w.basic_bounds.real", re, lo, tol),
        Verdict::scalar("w.basic_bounds.imag", im, lo, tol),
    ])
}
