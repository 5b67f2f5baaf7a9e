use thiserror::Error;

/// Errors raised while building chains, evaluating closed forms or running
/// the numerical cross-checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    /// A denominator (transformation function or Wronskian) vanishes at `x`.
    #[error("pole at x = {x}")]
    Pole { x: f64 },

    /// The Wronskian of the first `prefix` transformation functions changes
    /// sign near `x`, so the intermediate potential has a pole there.
    #[error("singular chain: prefix Wronskian of order {prefix} vanishes near x = {x}")]
    SingularChain { prefix: usize, x: f64 },

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),

    #[error("invalid wavenumber: {0}")]
    InvalidK(String),

    #[error("integration path from {from} to {to} crosses a zero of the solution near {zero}")]
    IntegrationPath { from: f64, to: f64, zero: f64 },

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("quadrature did not reach tolerance {tol:e} (estimated error {estimate:e})")]
    Accuracy { tol: f64, estimate: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
