use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{HermitianMatrix, Matrix, C64};

const UNIT_TOL: f64 = 1e-12;

/// A unital positive linear map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PositiveMapSpec {
    /// `T ↦ ⟨Tx, x⟩` for a unit vector `x`.
    VectorState { x: Vec<C64> },
    /// `T ↦ P*TP` for a matrix `P` with orthonormal columns.
    Compression { columns: Vec<Vec<C64>> },
    /// `T ↦ tr(T)/n`.
    NormalizedTrace,
}

fn dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

impl PositiveMapSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            PositiveMapSpec::VectorState { x } => {
                if x.len() != n {
                    return Err(Error::DimensionMismatch { left: x.len(), right: n });
                }
                let norm2 = dot(x, x).re;
                if (norm2.sqrt() - 1.0).abs() > UNIT_TOL {
                    return Err(Error::InvalidParameter(format!("vector state needs a unit vector, norm is {}", norm2.sqrt())));
                }
            }
            PositiveMapSpec::Compression { columns } => {
                if columns.is_empty() || columns.len() > n {
                    return Err(Error::InvalidParameter(format!(
                        "compression needs between 1 and {n} columns, got {}",
                        columns.len()
                    )));
                }
                for (i, ci) in columns.iter().enumerate() {
                    if ci.len() != n {
                        return Err(Error::DimensionMismatch { left: ci.len(), right: n });
                    }
                    for (j, cj) in columns.iter().enumerate().skip(i) {
                        let target = if i == j { 1.0 } else { 0.0 };
                        let d = dot(ci, cj);
                        if (d - C64::new(target, 0.0)).norm() > UNIT_TOL {
                            return Err(Error::InvalidParameter(format!(
                                "compression columns are not orthonormal: <c{i}, c{j}> = {d}"
                            )));
                        }
                    }
                }
            }
            PositiveMapSpec::NormalizedTrace => {}
        }
        Ok(())
    }

    pub fn apply(&self, t: &HermitianMatrix) -> Result<HermitianMatrix> {
        let n = t.dim();
        self.validate(n)?;
        Ok(match self {
            PositiveMapSpec::VectorState { x } => HermitianMatrix::scalar(1, t.quadratic_form(x).re),
            PositiveMapSpec::NormalizedTrace => HermitianMatrix::scalar(1, t.trace().re / n as f64),
            PositiveMapSpec::Compression { columns } => {
                let k = columns.len();
                let tp: Vec<Vec<C64>> = columns.iter().map(|c| t.mul_vec(c)).collect();
                let mut out = Matrix::zeros(k);
                for i in 0..k {
                    for j in 0..k {
                        out[(i, j)] = dot(&columns[i], &tp[j]);
                    }
                }
                HermitianMatrix::symmetrize(&out)
            }
        })
    }
}

/// The weight `t ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct TradeParam(f64);

impl TradeParam {
    pub fn new(t: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&t) {
            Ok(Self(t))
        } else {
            Err(Error::InvalidParameter(format!("t must lie in [0, 1], got {t}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for TradeParam {
    type Error = Error;
    fn try_from(t: f64) -> Result<Self> {
        Self::new(t)
    }
}

impl From<TradeParam> for f64 {
    fn from(t: TradeParam) -> f64 {
        t.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn maps_are_unital() {
        let e1 = PositiveMapSpec::VectorState { x: vec![c(1.0), c(0.0), c(0.0)] };
        let tr = PositiveMapSpec::NormalizedTrace;
        let s = 0.5f64.sqrt();
        let comp = PositiveMapSpec::Compression {
            columns: vec![vec![c(s), c(s), c(0.0)], vec![c(0.0), c(0.0), C64::new(0.0, 1.0)]],
        };
        for m in [&e1, &tr, &comp] {
            let out = m.apply(&HermitianMatrix::identity(3)).unwrap();
            assert!(out.max_abs_diff(&Matrix::identity(out.dim())) < 1e-15);
        }
        let d = HermitianMatrix::diag(&[1.0, 16.0, 4.0]);
        assert_eq!(e1.apply(&d).unwrap()[(0, 0)].re, 1.0);
        assert!((tr.apply(&d).unwrap()[(0, 0)].re - 7.0).abs() < 1e-15);
        let cd = comp.apply(&d).unwrap();
        assert!((cd[(0, 0)].re - 8.5).abs() < 1e-14 && (cd[(1, 1)].re - 4.0).abs() < 1e-14);
    }

    #[test]
    fn invalid_maps_are_rejected() {
        let bad = PositiveMapSpec::VectorState { x: vec![c(1.0), c(1.0)] };
        assert!(bad.validate(2).is_err());
        let bad = PositiveMapSpec::Compression { columns: vec![vec![c(1.0), c(0.0)], vec![c(1.0), c(0.0)]] };
        assert!(bad.validate(2).is_err());
        assert!(PositiveMapSpec::NormalizedTrace.validate(4).is_ok());
        assert!(TradeParam::new(1.5).is_err());
        assert!(serde_json::from_str::<TradeParam>("-0.1").is_err());
    }

    #[test]
    fn map_serde() {
        let m = PositiveMapSpec::VectorState { x: vec![c(1.0)] };
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"kind":"vector_state","x":[[1.0,0.0]]}"#);
        assert_eq!(serde_json::from_str::<PositiveMapSpec>(r#"{"kind":"normalized_trace"}"#).unwrap(), PositiveMapSpec::NormalizedTrace);
    }
}
