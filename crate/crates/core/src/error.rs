use thiserror::Error;

/// Errors raised by the exact kernel and everything built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operands live in different polynomial rings: [{0}] vs [{1}]")]
    RingMismatch(String, String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("partition {partition} does not fit the ({m},{n})-hook")]
    HookViolation { partition: String, m: usize, n: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("coefficient alpha_{0} is undefined beyond the supplied prefix")]
    UndefinedBeyondPrefix(usize),
    #[error("need indices up to {needed} but only {available} coefficients were supplied")]
    InsufficientPrefix { needed: usize, available: usize },
    #[error("prefix of length {0} is too short (need at least 4 terms)")]
    PrefixTooShort(usize),
    #[error("cobordisms have different boundary counts ({0} vs {1})")]
    MismatchedK(usize, usize),
    #[error("repeated root {0}")]
    RepeatedRoot(String),
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),
    #[error("Laurent window [{lo}, {hi}] does not cover [-{n}, {n}]")]
    InsufficientWindow { lo: i64, hi: i64, n: i64 },
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
