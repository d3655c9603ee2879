use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("entry count {len} does not match shape {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("dimension mismatch: {context} (left {left:?}, right {right:?})")]
    DimensionMismatch {
        context: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("parameter `{name}` = {value} violates `{constraint}`")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("zero matrix not allowed: {0}")]
    ZeroMatrix(&'static str),

    #[error("all singular values are zero; nothing to bucket")]
    ZeroSpectrum,

    #[error("bucket decomposition does not belong to these SVD factors")]
    ForeignDecomposition,

    #[error("relative error ratio undefined: {0} has zero spectral norm")]
    UndefinedRatio(&'static str),

    #[error("calibration failed: no multiplier up to cap {cap} meets the target failure rate")]
    CalibrationFailed { cap: f64 },

    #[error("singular value decomposition did not converge")]
    SvdFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
