use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    /// A factorization identity failed at a specific entry.
    #[error("{identity} fails at entry ({row}, {col}): got {found}, expected {expected}")]
    Axiom {
        identity: &'static str,
        row: usize,
        col: usize,
        found: String,
        expected: String,
    },

    #[error("morphism condition {condition} fails at entry ({row}, {col})")]
    Morphism {
        condition: &'static str,
        row: usize,
        col: usize,
    },

    #[error("factorization contains unit entries; run strip_units first")]
    UnitEntries,

    #[error("module relation {relation} does not hold")]
    ModuleRelation { relation: &'static str },

    #[error("subspace is not closed under the action of {0}")]
    NotSubmodule(&'static str),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors that signal a violated mathematical identity rather than bad input.
    pub fn is_axiom_failure(&self) -> bool {
        matches!(
            self,
            Error::Axiom { .. } | Error::Morphism { .. } | Error::ModuleRelation { .. }
        )
    }
}
