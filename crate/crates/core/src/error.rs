use std::fmt;

use serde::Serialize;

/// A single failed check, addressed by a dotted field path such as
/// `levi.blocks` or `sigma.dual`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub field: String,
    pub message: String,
}

impl Violation {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {}", join(.0))]
    Invalid(Vec<Violation>),

    #[error("levi {0} is flagged unsupported-for-rgroup")]
    UnsupportedLevi(String),

    #[error("no reducibility flag for self-dual class `{0}`")]
    MissingReducibility(String),

    #[error("weyl elements act on {expected} blocks, got {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("d2 is not defined for this scenario (m <= 1 and c0 fixes tau)")]
    D2Undefined,

    #[error("pair shape mismatch: {0}")]
    PairShape(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than the engine.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Inconsistency(_))
    }
}

impl From<Vec<Violation>> for Error {
    fn from(v: Vec<Violation>) -> Self {
        Error::Invalid(v)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
