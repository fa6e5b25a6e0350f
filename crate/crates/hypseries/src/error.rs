//! Error type shared by every numeric operation in the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the domain the operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation point within the pole-detection tolerance of a pole.
    #[error("pole error: input too close to pole at {0}")]
    Pole(String),

    /// A summation or extrapolation failed to stabilize within budget.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Working precision is insufficient for the requested result.
    #[error("precision error: {0}")]
    Precision(String),

    /// Identity id not present in the catalog.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    /// Malformed catalog file or expression tree.
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
