//! Cyclic complex Jacobi eigensolver for Hermitian matrices.
//!
//! Each step picks a pair `(p, q)`, removes the phase of `h[p][q]` with a
//! diagonal unitary and then applies a real plane rotation, so the combined
//! 2x2 unitary is
//!
//! ```text
//! G = [[ c,      s    ],
//!      [ -s·ū,   c·ū  ]]     u = h[p][q] / |h[p][q]|
//! ```
//!
//! and `G* H G` has a zero in position `(p, q)`. Sweeps run over all pairs
//! in row order until the off-diagonal Frobenius norm drops below
//! `1e-13 · max(1, ‖X‖_F)`.

use super::matrix::{HermitianMatrix, Matrix, C64};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
const OFF_DIAG_REL: f64 = 1e-13;

/// Eigenvalues in ascending order with a unitary matrix of eigenvectors (columns).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl EigenDecomposition {
    pub fn lambda_min(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    /// Functional calculus: `V · diag(f(λ)) · V*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        let fl: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..n {
                    acc += v[(i, k)] * v[(j, k)].conj() * fl[k];
                }
                out[(i, j)] = acc;
                if i != j {
                    out[(j, i)] = acc.conj();
                }
            }
            out[(i, i)] = C64::new(out[(i, i)].re, 0.0);
        }
        HermitianMatrix::symmetrize(&out)
    }

    /// `‖XV − VΛ‖_F`.
    pub fn residual(&self, x: &Matrix) -> f64 {
        let xv = x.matmul(&self.vectors);
        let n = x.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (xv[(i, j)] - self.vectors[(i, j)] * self.values[j]).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `‖V*V − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let g = self.vectors.adjoint_mul(&self.vectors);
        (&g - &Matrix::identity(g.dim())).frobenius_norm()
    }
}

fn off_diagonal_norm(h: &Matrix) -> f64 {
    let n = h.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += h[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi(x: &HermitianMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<Matrix>)> {
    let n = x.dim();
    let mut h = x.as_matrix().clone();
    let mut v = want_vectors.then(|| Matrix::identity(n));
    let threshold = OFF_DIAG_REL * x.frobenius_norm().max(1.0);

    let mut converged = off_diagonal_norm(&h) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut h, v.as_mut(), p, q);
            }
        }
        converged = off_diagonal_norm(&h) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps, off_norm: off_diagonal_norm(&h) });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = v.map(|v| {
        let mut sorted = Matrix::zeros(n);
        for (new_j, &old_j) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, new_j)] = v[(i, old_j)];
            }
        }
        sorted
    });
    Ok((values, vectors))
}

#[inline]
fn rotate(h: &mut Matrix, v: Option<&mut Matrix>, p: usize, q: usize) {
    let hpq = h[(p, q)];
    let abs = hpq.norm();
    if abs == 0.0 {
        return;
    }
    let app = h[(p, p)].re;
    let aqq = h[(q, q)].re;
    let u = hpq / abs;
    let theta = (aqq - app) / (2.0 * abs);
    let t = if theta.is_finite() {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    } else {
        0.0
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let ub = u.conj();
    let g00 = C64::new(c, 0.0);
    let g01 = C64::new(s, 0.0);
    let g10 = -ub * s;
    let g11 = ub * c;

    let n = h.dim();
    // H <- H G (columns p, q)
    {
        let data = h.as_mut_slice();
        for k in 0..n {
            let hkp = data[k * n + p];
            let hkq = data[k * n + q];
            data[k * n + p] = hkp * g00 + hkq * g10;
            data[k * n + q] = hkp * g01 + hkq * g11;
        }
        // H <- G* H (rows p, q)
        let (c00, c01, c10, c11) = (g00.conj(), g01.conj(), g10.conj(), g11.conj());
        for k in 0..n {
            let hpk = data[p * n + k];
            let hqk = data[q * n + k];
            data[p * n + k] = c00 * hpk + c10 * hqk;
            data[q * n + k] = c01 * hpk + c11 * hqk;
        }
        data[p * n + q] = C64::new(0.0, 0.0);
        data[q * n + p] = C64::new(0.0, 0.0);
        data[p * n + p] = C64::new(data[p * n + p].re, 0.0);
        data[q * n + q] = C64::new(data[q * n + q].re, 0.0);
    }
    if let Some(v) = v {
        let data = v.as_mut_slice();
        for k in 0..n {
            let vkp = data[k * n + p];
            let vkq = data[k * n + q];
            data[k * n + p] = vkp * g00 + vkq * g10;
            data[k * n + q] = vkp * g01 + vkq * g11;
        }
    }
}

/// Full Hermitian eigendecomposition, eigenvalues ascending.
pub fn eig_hermitian(x: &HermitianMatrix) -> Result<EigenDecomposition> {
    let (values, vectors) = jacobi(x, true)?;
    Ok(EigenDecomposition { values, vectors: vectors.expect("vectors requested") })
}

/// Eigenvalues only (ascending); skips accumulation of the rotations.
pub fn eigvals_hermitian(x: &HermitianMatrix) -> Result<Vec<f64>> {
    Ok(jacobi(x, false)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(rows: &[Vec<C64>]) -> HermitianMatrix {
        HermitianMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let e = eig_hermitian(&HermitianMatrix::diag(&[3.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![2.0, 3.0]);
        assert!(e.residual(&Matrix::diag_real(&[3.0, 2.0])) < 1e-15);
    }

    #[test]
    fn two_by_two_complex_example() {
        // trace 5, det 6 - |1+i|^2 = 4  =>  eigenvalues 1, 4
        let x = h(&[
            vec![C64::new(2.0, 0.0), C64::new(1.0, 1.0)],
            vec![C64::new(1.0, -1.0), C64::new(3.0, 0.0)],
        ]);
        let e = eig_hermitian(&x).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] - 4.0).abs() < 1e-14);
        assert!(e.residual(&x) < 1e-13);
        assert!(e.unitarity_defect() < 1e-14);
    }

    #[test]
    fn equal_diagonal_rotation() {
        let x = h(&[
            vec![C64::new(1.0, 0.0), C64::new(0.0, 2.0)],
            vec![C64::new(0.0, -2.0), C64::new(1.0, 0.0)],
        ]);
        let e = eig_hermitian(&x).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14 && (e.values[1] - 3.0).abs() < 1e-14);
        assert!(e.residual(&x) < 1e-13);
    }

    #[test]
    fn values_only_path_agrees() {
        let x = h(&[
            vec![C64::new(4.0, 0.0), C64::new(1.0, -2.0), C64::new(0.5, 0.0)],
            vec![C64::new(1.0, 2.0), C64::new(-1.0, 0.0), C64::new(0.0, 0.3)],
            vec![C64::new(0.5, 0.0), C64::new(0.0, -0.3), C64::new(2.0, 0.0)],
        ]);
        let a = eig_hermitian(&x).unwrap().values;
        let b = eigvals_hermitian(&x).unwrap();
        for (p, q) in a.iter().zip(&b) {
            assert!((p - q).abs() < 1e-13);
        }
    }

    #[test]
    fn map_square_root_of_identity() {
        let e = eig_hermitian(&HermitianMatrix::identity(3)).unwrap();
        let r = e.map(f64::sqrt);
        assert!(r.max_abs_diff(&Matrix::identity(3)) < 1e-15);
    }
}
