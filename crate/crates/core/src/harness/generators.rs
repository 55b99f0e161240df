//! Random instances built so that a chosen hypothesis holds by construction.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::catalog::{Instance, PositiveMapSpec};
use crate::error::{Error, Result};
use crate::linalg::{self, HermitianMatrix, Matrix, C64};
use crate::transform::Window;

pub const DEFAULT_FILL: f64 = 0.9;
/// `ln` of the range the window center is drawn from, log-uniformly.
const LOG_MU: (f64, f64) = (-1.609_437_912_434_100_3, 1.609_437_912_434_100_3);
const RHO: (f64, f64) = (0.05, 0.98);
/// `r/μ` for the two-disk construction; the lower end is just above `1/√2`.
const RHO_BIDISK: (f64, f64) = (0.7072, 0.995);

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    /// `‖A − μI‖ = fill·r`.
    Disk { mu: f64, r: f64, fill: f64 },
    /// A disk draw with `ℑA ⪰ 0`.
    DiskDissipative { mu: f64, r: f64, fill: f64 },
    /// `A` in both disks around `μI` and `iμI`.
    Bidisk { mu: f64, r: f64, fill: f64 },
    /// `A` in both disks around `μI` and `−iμI`, so `C(A)` and `C(iA)` are accretive.
    BidiskIa { mu: f64, r: f64, fill: f64 },
    /// Singular values uniform in `[m, M]`.
    SingularBand { m: f64, big_m: f64 },
    /// A Jordan block with random eigenvalue plus a small Gaussian perturbation.
    JordanLike,
    /// Independent complex Gaussian entries.
    Unrestricted,
    /// `U diag(λ) U*` with complex Gaussian `λ`.
    Normal,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub kind: GeneratorKind,
    pub dim: usize,
    pub seed: u64,
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    Matrix::new(n, (0..n * n).map(|_| gaussian(rng)).collect()).expect("n > 0")
}

pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..n).map(|_| gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Eigenvectors of a random Hermitian matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Matrix> {
    let h = HermitianMatrix::symmetrize(&gaussian_matrix(rng, n));
    Ok(linalg::eig_hermitian(&h)?.vectors)
}

/// A Gaussian direction of unit spectral norm.
fn unit_direction<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Matrix> {
    loop {
        let b = gaussian_matrix(rng, n);
        let norm = linalg::spectral_norm(&b)?;
        if norm > 1e-6 {
            return Ok(b.scale_real(1.0 / norm));
        }
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    Ok(())
}

fn check_fill(fill: f64) -> Result<()> {
    if !(fill > 0.0 && fill <= 1.0) {
        return Err(Error::InvalidParameter(format!("fill must lie in (0, 1], got {fill}")));
    }
    Ok(())
}

/// `A = μI + fill·r·B/‖B‖`, with the window `(μ − r, μ + r)`.
pub fn gen_disk<R: Rng + ?Sized>(rng: &mut R, n: usize, mu: f64, r: f64, fill: f64) -> Result<(Matrix, Window)> {
    check_dim(n)?;
    check_fill(fill)?;
    if !(r > 0.0 && mu > r) {
        return Err(Error::Degenerate(format!("disk needs mu > r > 0, got mu = {mu}, r = {r}")));
    }
    let w = Window::from_center(mu, r)?;
    let a = unit_direction(rng, n)?.scale_real(fill * r).shift(C64::new(mu, 0.0));
    Ok((a, w))
}

/// A disk draw whose imaginary part is positive semidefinite: the direction is
/// `H + iP` with `H` Hermitian and `P ⪰ 0`.
pub fn gen_disk_dissipative<R: Rng + ?Sized>(rng: &mut R, n: usize, mu: f64, r: f64, fill: f64) -> Result<(Matrix, Window)> {
    check_dim(n)?;
    check_fill(fill)?;
    if !(r > 0.0 && mu > r) {
        return Err(Error::Degenerate(format!("disk needs mu > r > 0, got mu = {mu}, r = {r}")));
    }
    let w = Window::from_center(mu, r)?;
    let h = HermitianMatrix::symmetrize(&gaussian_matrix(rng, n)).into_matrix();
    let p = random_psd(rng, n).into_matrix().scale(C64::new(0.0, rng.random_range(0.1..3.0)));
    let d = &h + &p;
    let norm = linalg::spectral_norm(&d)?.max(1e-12);
    Ok((d.scale_real(fill * r / norm).shift(C64::new(mu, 0.0)), w))
}

/// `A = μ(1+i)/2·I + s·B/‖B‖` with `s = fill·(r − μ/√2)`.
pub fn gen_bidisk<R: Rng + ?Sized>(rng: &mut R, n: usize, mu: f64, r: f64, fill: f64) -> Result<(Matrix, Window)> {
    check_dim(n)?;
    check_fill(fill)?;
    let gap = r - mu * std::f64::consts::FRAC_1_SQRT_2;
    if gap < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "two-disk construction needs r >= mu/sqrt(2), got mu = {mu}, r = {r}"
        )));
    }
    let w = Window::from_center(mu, r)?;
    let center = C64::new(mu / 2.0, mu / 2.0);
    let a = unit_direction(rng, n)?.scale_real(fill * gap).shift(center);
    Ok((a, w))
}

/// Entrywise conjugate of a [`gen_bidisk`] draw; its disks are centered at `μI` and `−iμI`.
pub fn gen_bidisk_ia<R: Rng + ?Sized>(rng: &mut R, n: usize, mu: f64, r: f64, fill: f64) -> Result<(Matrix, Window)> {
    let (a, w) = gen_bidisk(rng, n, mu, r, fill)?;
    Ok((a.conj(), w))
}

/// `U diag(σ) V*` with `σ_i` uniform in `[m, M]`.
pub fn gen_singular_band<R: Rng + ?Sized>(rng: &mut R, n: usize, m: f64, big_m: f64) -> Result<(Matrix, Window)> {
    check_dim(n)?;
    let w = Window::new(m, big_m)?;
    let sigma: Vec<f64> = (0..n).map(|_| rng.random_range(m..=big_m)).collect();
    let u = random_unitary(rng, n)?;
    let v = random_unitary(rng, n)?;
    Ok((u.matmul(&Matrix::diag_real(&sigma)).matmul(&v.adjoint()), w))
}

pub fn gen_jordan_like<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Matrix> {
    check_dim(n)?;
    let lambda = gaussian(rng);
    let mut a = Matrix::scalar(n, lambda);
    for i in 0..n - 1 {
        a[(i, i + 1)] = C64::new(1.0, 0.0);
    }
    let eps = 10f64.powf(rng.random_range(-8.0..-1.0));
    Ok(&a + &gaussian_matrix(rng, n).scale_real(eps))
}

pub fn gen_normal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Matrix> {
    check_dim(n)?;
    let u = random_unitary(rng, n)?;
    let d: Vec<C64> = (0..n).map(|_| gaussian(rng)).collect();
    Ok(u.matmul(&Matrix::diag(&d)).matmul(&u.adjoint()))
}

/// Draws the matrix described by `spec` from its own seed.
pub fn generate(spec: &GeneratorSpec) -> Result<(Matrix, Option<Window>)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.dim;
    Ok(match spec.kind {
        GeneratorKind::Disk { mu, r, fill } => gen_disk(&mut rng, n, mu, r, fill).map(|(a, w)| (a, Some(w)))?,
        GeneratorKind::DiskDissipative { mu, r, fill } => {
            gen_disk_dissipative(&mut rng, n, mu, r, fill).map(|(a, w)| (a, Some(w)))?
        }
        GeneratorKind::Bidisk { mu, r, fill } => gen_bidisk(&mut rng, n, mu, r, fill).map(|(a, w)| (a, Some(w)))?,
        GeneratorKind::BidiskIa { mu, r, fill } => gen_bidisk_ia(&mut rng, n, mu, r, fill).map(|(a, w)| (a, Some(w)))?,
        GeneratorKind::SingularBand { m, big_m } => gen_singular_band(&mut rng, n, m, big_m).map(|(a, w)| (a, Some(w)))?,
        GeneratorKind::JordanLike => (gen_jordan_like(&mut rng, n)?, None),
        GeneratorKind::Unrestricted => (gaussian_matrix(&mut rng, n), None),
        GeneratorKind::Normal => (gen_normal(&mut rng, n)?, None),
    })
}

/// `(μ, r)` with `μ` log-uniform on `[0.2, 5]` and `r/μ` uniform on `RHO`.
pub fn random_center_radius<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let mu = rng.random_range(LOG_MU.0..LOG_MU.1).exp();
    (mu, mu * rng.random_range(RHO.0..RHO.1))
}

fn random_bidisk_params<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let mu = rng.random_range(LOG_MU.0..LOG_MU.1).exp();
    (mu, mu * rng.random_range(RHO_BIDISK.0..RHO_BIDISK.1))
}

fn random_window<R: Rng + ?Sized>(rng: &mut R) -> Window {
    let (mu, r) = random_center_radius(rng);
    Window::from_center(mu, r).expect("0 < r < mu")
}

/// Positive semidefinite, with random rank at least one.
pub fn random_psd<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    let g = gaussian_matrix(rng, n);
    let rank = rng.random_range(1..=n);
    let mut h = Matrix::zeros(n);
    for k in 0..rank {
        for i in 0..n {
            for j in 0..n {
                h[(i, j)] += g[(i, k)] * g[(j, k)].conj();
            }
        }
    }
    HermitianMatrix::symmetrize(&h)
}

pub fn random_map<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<PositiveMapSpec> {
    Ok(match rng.random_range(0..3) {
        0 => PositiveMapSpec::VectorState { x: random_unit_vector(rng, n) },
        1 => {
            let u = random_unitary(rng, n)?;
            let k = rng.random_range(1..=n);
            PositiveMapSpec::Compression { columns: (0..k).map(|j| u.column(j)).collect() }
        }
        _ => PositiveMapSpec::NormalizedTrace,
    })
}

fn i_times_adjoint(x: &Matrix) -> Matrix {
    x.adjoint().scale(C64::new(0.0, 1.0))
}

/// Any matrix with a random window; mixes several families.
fn loose<R: Rng + ?Sized>(rng: &mut R, n: usize, fill: f64) -> Result<(Matrix, Window)> {
    let (mu, r) = random_center_radius(rng);
    let w = Window::from_center(mu, r)?;
    let a = match rng.random_range(0..5) {
        0 => gen_disk(rng, n, mu, r, fill)?.0,
        1 => gaussian_matrix(rng, n).scale_real(mu),
        2 => gen_normal(rng, n)?.scale_real(mu),
        3 => HermitianMatrix::symmetrize(&gaussian_matrix(rng, n)).into_matrix().scale_real(mu),
        _ => gen_jordan_like(rng, n)?,
    };
    Ok((a, w))
}

fn any_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Matrix> {
    match rng.random_range(0..3) {
        0 => Ok(gaussian_matrix(rng, n)),
        1 => gen_normal(rng, n),
        _ => gen_jordan_like(rng, n),
    }
}

/// Builds an instance aimed at the hypothesis of `case_id`.
pub fn instance_for_case<R: Rng + ?Sized>(rng: &mut R, case_id: &str, n: usize, fill: f64) -> Result<Instance> {
    let disk = |rng: &mut R| {
        let (mu, r) = random_center_radius(rng);
        gen_disk(rng, n, mu, r, fill)
    };
    let band = |rng: &mut R| {
        let (mu, r) = random_center_radius(rng);
        gen_singular_band(rng, n, mu - r, mu + r)
    };
    let variant = case_id.rsplit('.').next().unwrap_or("");
    let with = |a: Matrix, w: Window| Instance::new(a).with_window(w);

    let inst = match case_id {
        "prop.1" | "prop.2" | "prop.3" | "prop.4" | "prop.5" => {
            let (a, w) = loose(rng, n, fill)?;
            with(a, w)
        }
        "prop.7" => {
            let (mu, r) = random_center_radius(rng);
            let (a, w) = gen_disk_dissipative(rng, n, mu, r, fill)?;
            with(a, w)
        }
        "prop.6" | "eq.intermediate" | "rem.sandwich" | "w.vs_real" | "norm.vs_w" | "w.lower_sq" => {
            let (a, w) = disk(rng)?;
            with(a, w)
        }
        "thm.block_triangle" => {
            let w = random_window(rng);
            let scale = w.center();
            let s = gaussian_matrix(rng, n).scale_real(scale);
            let t = gaussian_matrix(rng, n).scale_real(scale);
            with(s, w).with_b(t)
        }
        "thm.convex_combo" | "w.geo_mean" => {
            let (mu, r) = random_bidisk_params(rng);
            let (a, w) = gen_bidisk(rng, n, mu, r, fill)?;
            with(a, w)
        }
        "lem.sqrt_equiv" => {
            let x = random_psd(rng, n);
            let y = random_psd(rng, n).add(&HermitianMatrix::scalar(n, rng.random_range(0.05..1.0)));
            let yi = linalg::inv_sqrt_pd(&y, crate::linalg::Tolerance::DEFAULT)?;
            let xh = linalg::sqrt_psd(&x, crate::linalg::Tolerance::DEFAULT)?;
            let crit = linalg::spectral_norm(&xh.matmul(&yi))?.powi(2);
            let mut inst = Instance::new(x.into_matrix()).with_b(y.into_matrix());
            inst.alpha = Some((crit * rng.random_range(0.5..1.5)).max(1e-3));
            inst
        }
        "prop.norm_product" => {
            Instance::new(random_psd(rng, n).into_matrix()).with_b(random_psd(rng, n).into_matrix())
        }
        "lem.posmap" | "ineq.posmap_reverse" => {
            let (a, w) = band(rng)?;
            let mut inst = with(a, w);
            inst.map = Some(random_map(rng, n)?);
            inst
        }
        "w.basic_bounds" | "prop.mixed_schwarz" => Instance::new(any_matrix(rng, n)?),
        "w.product" => {
            let (a, wa) = disk(rng)?;
            let (b, wb) = disk(rng)?;
            let mut inst = with(a, wa).with_b(b);
            inst.window_b = Some(wb);
            inst
        }
        "w.commutator.minus" => {
            let (a, w) = disk(rng)?;
            with(a, w).with_b(any_matrix(rng, n)?)
        }
        "w.commutator.plus" => {
            // iA = X lies in the disk
            let (x, w) = disk(rng)?;
            with(x.scale(C64::new(0.0, -1.0)), w).with_b(any_matrix(rng, n)?)
        }
        "cor.final" => {
            let (mu, r) = random_bidisk_params(rng);
            let (a, w) = gen_bidisk_ia(rng, n, mu, r, fill)?;
            with(a, w).with_b(any_matrix(rng, n)?)
        }
        _ if case_id.starts_with("thm.reverse.") || case_id.starts_with("cor.real_minus_abs.") => {
            let (x, w) = band(rng)?;
            let a = if variant == "ainv" { linalg::inverse(&x)? } else { x };
            with(a, w)
        }
        _ if ["thm.abs_real.", "cor.abs_minus_real.", "thm.squared.", "cor.anticommutator."]
            .iter()
            .any(|p| case_id.starts_with(p)) =>
        {
            let (x, w) = disk(rng)?;
            let a = match variant {
                // iA* = X
                "iastar" => i_times_adjoint(&x),
                "ainv" => linalg::inverse(&x)?,
                _ => x,
            };
            with(a, w)
        }
        _ => return Err(Error::UnknownCase(case_id.to_string())),
    };
    Ok(inst)
}
