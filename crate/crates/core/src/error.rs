use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An edge set is not closed under the unit interval condition.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A brute-force enumeration was asked to run above its configured size.
    #[error("resource limit: size {size} exceeds the configured limit of {limit} vertices")]
    ResourceLimit { size: usize, limit: usize },

    /// The brute-force expansion failed its symmetry check.
    #[error("non-symmetric input: {0}")]
    NonSymmetric(String),

    /// An operation received a symmetric function in the wrong basis.
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    /// A recurrence triple failed one of its hypotheses.
    #[error("precondition {hypothesis} failed: {detail}")]
    Precondition {
        hypothesis: &'static str,
        detail: String,
    },

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
