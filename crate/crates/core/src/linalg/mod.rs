//! Dense complex linear algebra: Hermitian spectra, PSD square roots,
//! polar absolute values, spectral norms and Loewner-order predicates.

mod eig;
mod matrix;

pub use eig::{eig_hermitian, eigvals_hermitian, EigenDecomposition, MAX_SWEEPS};
pub use matrix::{HermitianMatrix, Matrix, Tolerance, C64};

use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// `ℜA = (A + A*)/2`.
pub fn hermitian_part(a: &Matrix) -> HermitianMatrix {
    HermitianMatrix::symmetrize(a)
}

/// `ℑA = (A − A*)/(2i)`.
pub fn imaginary_part(a: &Matrix) -> HermitianMatrix {
    // (A − A*)/(2i) = ℜ(−iA)
    HermitianMatrix::symmetrize(&a.scale(C64::new(0.0, -1.0)))
}

pub fn lambda_min(x: &HermitianMatrix) -> Result<f64> {
    Ok(eigvals_hermitian(x)?[0])
}

pub fn lambda_max(x: &HermitianMatrix) -> Result<f64> {
    Ok(*eigvals_hermitian(x)?.last().expect("non-empty spectrum"))
}

/// Spectral norm of a Hermitian matrix: `max |λ_i|`.
pub fn hermitian_norm(x: &HermitianMatrix) -> Result<f64> {
    let ev = eigvals_hermitian(x)?;
    Ok(ev[0].abs().max(ev[ev.len() - 1].abs()))
}

/// `√λ_max(A*A)`, the largest singular value.
pub fn spectral_norm(a: &Matrix) -> Result<f64> {
    let gram = HermitianMatrix::symmetrize(&a.adjoint_mul(a));
    Ok(lambda_max(&gram)?.max(0.0).sqrt())
}

/// Singular values in ascending order.
pub fn singular_values(a: &Matrix) -> Result<Vec<f64>> {
    let gram = HermitianMatrix::symmetrize(&a.adjoint_mul(a));
    Ok(eigvals_hermitian(&gram)?.into_iter().map(|l| l.max(0.0).sqrt()).collect())
}

/// Principal square root of a PSD matrix.
///
/// Eigenvalues in `[−tol · max(1, ‖X‖), 0)` are clamped to zero; anything
/// more negative is rejected.
pub fn sqrt_psd(x: &HermitianMatrix, tol: Tolerance) -> Result<HermitianMatrix> {
    let e = eig_hermitian(x)?;
    let scale = e.lambda_min().abs().max(e.lambda_max().abs());
    let floor = -tol.abs(scale);
    if e.lambda_min() < floor {
        return Err(Error::NotPsd { lambda_min: e.lambda_min(), floor });
    }
    Ok(e.map(|l| l.max(0.0).sqrt()))
}

/// Inverse square root of a positive definite matrix.
pub fn inv_sqrt_pd(x: &HermitianMatrix, tol: Tolerance) -> Result<HermitianMatrix> {
    let e = eig_hermitian(x)?;
    let scale = e.lambda_max().abs().max(1.0);
    if e.lambda_min() <= tol.rel * scale {
        return Err(Error::Singular { value: e.lambda_min() });
    }
    Ok(e.map(|l| 1.0 / l.sqrt()))
}

/// `|A| = (A*A)^{1/2}`.
pub fn abs_op(a: &Matrix) -> Result<HermitianMatrix> {
    let gram = HermitianMatrix::symmetrize(&a.adjoint_mul(a));
    Ok(eig_hermitian(&gram)?.map(|l| l.max(0.0).sqrt()))
}

/// `|A*| = (AA*)^{1/2}`.
pub fn abs_adjoint(a: &Matrix) -> Result<HermitianMatrix> {
    abs_op(&a.adjoint())
}

/// `|A|² = A*A`.
pub fn abs_sq(a: &Matrix) -> HermitianMatrix {
    HermitianMatrix::symmetrize(&a.adjoint_mul(a))
}

/// `λ_min(X) ≥ −tol · max(1, ‖X‖)`.
pub fn is_psd(x: &HermitianMatrix, tol: Tolerance) -> Result<bool> {
    let ev = eigvals_hermitian(x)?;
    let scale = ev[0].abs().max(ev[ev.len() - 1].abs());
    Ok(ev[0] >= -tol.abs(scale))
}

/// `X ⪯ Y`; slack is `λ_min(Y − X)`.
pub fn loewner_leq(x: &HermitianMatrix, y: &HermitianMatrix, tol: Tolerance) -> Result<Verdict> {
    Verdict::loewner("loewner", x, y, tol)
}

/// `[[0, S], [T*, 0]]` of size `2n`.
pub fn block_off_diag(s: &Matrix, t: &Matrix) -> Result<Matrix> {
    s.check_same_dim(t)?;
    let n = s.dim();
    let ta = t.adjoint();
    let mut out = Matrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            out[(i, n + j)] = s[(i, j)];
            out[(n + i, j)] = ta[(i, j)];
        }
    }
    Ok(out)
}

/// `[[P, Q], [R, S]]` from four equal-size blocks.
pub fn block_2x2(p: &Matrix, q: &Matrix, r: &Matrix, s: &Matrix) -> Result<Matrix> {
    p.check_same_dim(q)?;
    p.check_same_dim(r)?;
    p.check_same_dim(s)?;
    let n = p.dim();
    let mut out = Matrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = p[(i, j)];
            out[(i, n + j)] = q[(i, j)];
            out[(n + i, j)] = r[(i, j)];
            out[(n + i, n + j)] = s[(i, j)];
        }
    }
    Ok(out)
}

/// Inverse by Gaussian elimination with partial pivoting.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.dim();
    let mut w = a.clone();
    let mut inv = Matrix::identity(n);
    let scale = a.as_slice().iter().map(|z| z.norm()).fold(0.0, f64::max);
    for col in 0..n {
        let (piv, piv_abs) = (col..n)
            .map(|r| (r, w[(r, col)].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("non-empty pivot range");
        if piv_abs <= f64::EPSILON * scale || piv_abs == 0.0 {
            return Err(Error::Singular { value: piv_abs });
        }
        if piv != col {
            for j in 0..n {
                let t = w[(col, j)];
                w[(col, j)] = w[(piv, j)];
                w[(piv, j)] = t;
                let t = inv[(col, j)];
                inv[(col, j)] = inv[(piv, j)];
                inv[(piv, j)] = t;
            }
        }
        let d = w[(col, col)].inv();
        for j in 0..n {
            w[(col, j)] *= d;
            inv[(col, j)] *= d;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = w[(r, col)];
            if f.re == 0.0 && f.im == 0.0 {
                continue;
            }
            for j in 0..n {
                let wc = w[(col, j)];
                let ic = inv[(col, j)];
                w[(r, j)] -= f * wc;
                inv[(r, j)] -= f * ic;
            }
        }
    }
    Ok(inv)
}

/// Checks both sides of `X ⪯ αY  ⇔  ‖X^{1/2} Y^{−1/2}‖ ≤ √α` for PSD `X` and positive definite `Y`.
///
/// The verdict passes when the two sides agree, or disagree only inside the
/// tolerance band of either side.
pub fn sqrt_leq_equiv(
    x: &HermitianMatrix,
    y: &HermitianMatrix,
    alpha: f64,
    tol: Tolerance,
) -> Result<Verdict> {
    x.check_same_dim(y)?;
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter(format!("alpha must be positive, got {alpha}")));
    }
    let y_inv_half = inv_sqrt_pd(y, tol)?;
    let x_half = sqrt_psd(x, tol)?;

    let order = Verdict::loewner("lem.sqrt_equiv.order", x, &y.scale(alpha), tol)?;
    let left = order.pass;
    let scale_left = order.lhs_summary.max(order.rhs_summary).max(1.0);
    let left_margin = order.slack / scale_left;

    let prod_norm = spectral_norm(&x_half.matmul(&y_inv_half))?;
    let root = alpha.sqrt();
    let right_margin = (root - prod_norm) / root.max(1.0);
    let right = right_margin >= -tol.rel;

    let band = 10.0 * tol.rel;
    let boundary = left_margin.abs() <= band || right_margin.abs() <= band;
    Ok(Verdict::equivalence("lem.sqrt_equiv", left, right, boundary, left_margin.min(right_margin))
        .with_detail("order_margin", left_margin)
        .with_detail("norm", prod_norm)
        .with_detail("sqrt_alpha", root))
}

/// Checks `[[cI, X], [X*, cI]] ⪰ 0  ⇔  ‖X‖ ≤ c`.
pub fn psd_block_norm_equiv(x: &Matrix, c: f64, tol: Tolerance) -> Result<Verdict> {
    if !(c > 0.0) {
        return Err(Error::InvalidParameter(format!("c must be positive, got {c}")));
    }
    let n = x.dim();
    let ci = Matrix::scalar(n, C64::new(c, 0.0));
    let block = HermitianMatrix::symmetrize(&block_2x2(&ci, x, &x.adjoint(), &ci)?);
    let lmin = lambda_min(&block)?;
    let norm = spectral_norm(x)?;
    let scale = c.max(norm).max(1.0);
    let left = lmin >= -tol.rel * scale;
    let right = norm <= c + tol.rel * scale;
    let boundary = lmin.abs() <= 10.0 * tol.rel * scale || (norm - c).abs() <= 10.0 * tol.rel * scale;
    Ok(Verdict::equivalence("psd_block_norm", left, right, boundary, lmin / scale)
        .with_detail("block_lambda_min", lmin)
        .with_detail("norm", norm))
}
