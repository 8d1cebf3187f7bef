use thiserror::Error;

/// Errors raised by the kernel-level numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// An argument fell outside the mathematical domain of the routine.
    #[error("domain error: {0}")]
    Domain(String),
    /// A discretisation grid was malformed or inconsistent with the data.
    #[error("grid error: {0}")]
    Grid(String),
}
