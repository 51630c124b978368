use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector length {got} does not match grid volume {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("operands live on different grid backends")]
    BackendMismatch,

    #[error("invalid endomorphism: {0}")]
    InvalidEndomorphism(String),

    #[error("size cap exceeded: {context} needs {needed}, cap is {cap}")]
    SizeCap {
        context: &'static str,
        needed: usize,
        cap: usize,
    },

    #[error("matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("eigensolver failed: {0}")]
    EigenFailure(String),

    #[error("cocycle precheck failed: deviation {deviation:.3e} exceeds {tolerance:.3e}")]
    NotACocycle { deviation: f64, tolerance: f64 },

    #[error("truncation radius {radius} too small for support radius {support}")]
    RadiusTooSmall { radius: i64, support: i64 },

    #[error("Fourier coefficient cutoff too small: tail mass {tail:.3e} exceeds {tolerance:.3e}")]
    TailMass { tail: f64, tolerance: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
