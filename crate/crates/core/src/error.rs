use thiserror::Error;

/// Everything that can go wrong while evaluating a bound or checking an identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input data (a profile, a delta sequence, a lemma bundle) is malformed.
    #[error("validation failed: {0}")]
    Validation(String),

    /// The data is well-formed but geometrically inconsistent, e.g. a negative genus.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    /// A closed form disagreed with its brute-force oracle.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    /// A remainder estimate left the `s^3/(r-2)` envelope.
    #[error("envelope violated at r={r}, s={s}: {detail}")]
    EnvelopeViolation { r: u64, s: u64, detail: String },

    /// An operation that is only meaningful under numerical hypotheses was called outside them.
    #[error("hypotheses not satisfied: {0}")]
    HypothesisFailure(String),

    /// An exact comparison could not be decided within the configured budget.
    #[error("comparison undecided: {0}")]
    Undecided(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
