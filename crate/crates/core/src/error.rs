use std::fmt;

use thiserror::Error;

/// A single failed check on a fibration description.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    /// Short name of the violated rule, e.g. `integrality`.
    pub rule: &'static str,
    /// The formula or condition that failed, with the offending values.
    pub detail: String,
}

impl Violation {
    pub(crate) fn new(rule: &'static str, detail: impl Into<String>) -> Self {
        Self {
            rule,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is not supported: p must be greater than 3")]
    SmallCharacteristic(u64),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid fibration: {}", join(.0))]
    Invalid(Vec<Violation>),

    #[error("refused: {0}")]
    BoundExceeded(String),

    #[error("missing data for {clause}: {}", .missing.join(", "))]
    Missing {
        clause: &'static str,
        missing: Vec<String>,
    },

    #[error("generic fiber is supersingular: {0}")]
    Supersingular(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn bound(msg: impl Into<String>) -> Self {
        Error::BoundExceeded(msg.into())
    }
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
