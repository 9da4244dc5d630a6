//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A point failed the hyperboloid-model invariants (Minkowski norm or
    /// sheet condition), or two points live in different dimensions.
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    /// An argument lies outside the mathematical domain of the operation
    /// (negative radius, origin where an annulus index is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter violates a stated admissibility range (exponent windows,
    /// delta bounds, grid invariants).
    #[error("range error: {0}")]
    Range(String),

    /// Adaptive quadrature exhausted its subdivision budget before reaching
    /// the requested tolerance. The achieved absolute error is reported so
    /// the caller can decide whether the value is still usable.
    #[error(
        "quadrature did not converge on [{a:.6e}, {b:.6e}]: requested rel {requested:.3e}, \
         achieved abs {achieved:.3e}"
    )]
    QuadNotConverged {
        a: f64,
        b: f64,
        requested: f64,
        achieved: f64,
    },

    /// An integrand returned NaN or +/-inf. The offending location is carried
    /// so the failure is reproducible.
    #[error("non-finite integrand value at {at}")]
    NonFinite { at: String },

    /// The quadrature engine was requested for a field without a radial
    /// profile; only radial integrands reduce to 1-D integrals.
    #[error("quad engine requires a radial profile for this field")]
    NonRadialQuad,

    /// Configuration parsing or validation failure (CLI and harness).
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialize(String),
}

impl Error {
    /// Exit code for the CLI: config errors map to 2, numerical failures to 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            _ => 3,
        }
    }
}
