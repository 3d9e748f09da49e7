use thiserror::Error;

/// Why a requested series cannot be summed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Divergence {
    #[error("Li_k(1) with k_1 = 1 diverges")]
    LeadingOneAtUnity,
    #[error("index ({0}) is not admissible (leading entry must exceed 1)")]
    NotAdmissible(String),
    #[error("signed index ({0}) fails the partial-weight convergence condition")]
    SignedCondition(String),
    #[error("word {0} ends with the letter 0; the integral diverges at the origin")]
    TrailingZeroLetter(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("divergent request: {0}")]
    Divergent(#[from] Divergence),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("parameter '{name}' out of range: {detail}")]
    ParamRange { name: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
