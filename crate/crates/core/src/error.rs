use thiserror::Error;

/// Errors surfaced by the verification library.
#[derive(Debug, Error)]
pub enum Error {
    /// Inconsistent structural data (mismatched root data, bad subgroup
    /// descriptors, parabolic data that is not a parabolic, ...).
    #[error("structural error: {0}")]
    Structural(String),

    /// A named precondition of an operation failed.
    #[error("argument error: {0}")]
    Argument(String),

    /// A size or window bound would be exceeded; never silently truncated.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// An enumeration could not certify saturation at the given bound.
    #[error("unsaturated: {0}")]
    Unsaturated(String),

    /// A constraint system had no solution or more than one.
    #[error("constraint error: {0}")]
    Constraint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
