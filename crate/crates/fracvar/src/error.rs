use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma function evaluated at a non-positive integer.
    #[error("gamma pole at x = {0}")]
    Pole(f64),
    /// Argument outside the operator's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Fractional order outside its admissible range.
    #[error("order error: {0}")]
    Order(String),
    /// Grid index outside the set the operator is defined on.
    #[error("index {index} outside valid range 0..{len}")]
    Index { index: usize, len: usize },
    /// The regressivity condition 1 + h z != 0 fails.
    #[error("regressivity violated: 1 + h*z = 0 for z = {z}, h = {h}")]
    Regressivity { z: f64, h: f64 },
    /// A backward difference needs grid points before the left endpoint.
    #[error("history error: {0}")]
    History(String),
    /// Operation incompatible with the problem configuration.
    #[error("config error: {0}")]
    Config(String),
    /// Expression evaluation failure.
    #[error("eval error: {0}")]
    Eval(String),
    /// Expression parse failure; `offset` is a byte offset into the source.
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    /// Laplace transform series does not converge for this z.
    #[error("series diverges: |1 + h*z| = {modulus} <= 1")]
    Divergence { modulus: f64 },
    /// Evaluation budget exhausted before reaching the tolerance.
    #[error("budget exhausted after {terms} terms")]
    Budget { terms: usize },
    /// Quadrature failed to meet the requested tolerance.
    #[error("quadrature error: {0}")]
    Quadrature(String),
    /// No Newton start converged.
    #[error("no extremal candidate converged")]
    NoConvergence,
    /// Problem-file validation failure; `path` is the offending field.
    #[error("invalid problem file: {path}: {message}")]
    Validation { path: String, message: String },
    /// I/O failure (message only, so the error stays cloneable).
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
