use thiserror::Error;

/// Errors raised by the numerical kernels and the catalog.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {len} entries do not form an n x n array for n = {n}")]
    NotSquare { n: usize, len: usize },

    #[error("matrix must have positive dimension")]
    EmptyMatrix,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian: asymmetry {asymmetry:e} exceeds {bound:e}")]
    NotHermitian { asymmetry: f64, bound: f64 },

    #[error("matrix is not positive semidefinite: lambda_min = {lambda_min:e}, allowed floor {floor:e}")]
    NotPsd { lambda_min: f64, floor: f64 },

    #[error("matrix is singular or numerically singular (smallest pivot / singular value {value:e})")]
    Singular { value: f64 },

    #[error("matrix is too ill-conditioned to invert reliably (condition estimate {cond:e})")]
    IllConditioned { cond: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid window: require 0 < m < M, got m = {m}, M = {big_m}")]
    InvalidWindow { m: f64, big_m: f64 },

    #[error("degenerate window: {0}")]
    Degenerate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown case id `{0}`")]
    UnknownCase(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
