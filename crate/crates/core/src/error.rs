use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("beta must be nonzero")]
    ZeroBeta,

    #[error("index out of range: k = {k} exceeds n = {n}")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("derivative order {m} exceeds series order {order}")]
    OrderTooLow { m: usize, order: usize },

    #[error("exp is only defined for series with zero constant term")]
    NonzeroConstantTerm,

    #[error("sequence `{name}` too short: need {needed} terms, got {got}")]
    SequenceTooShort {
        name: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("epsilon must be a positive finite number")]
    InvalidEpsilon,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation requires a polynomial of degree >= 1")]
    ConstantPolynomial,

    #[error("polynomial is not square-free")]
    NotSquareFree,

    #[error("parameters outside the hypothesis: {0}")]
    OutsideHypothesis(String),

    #[error("invalid rational literal {0:?} (expected p or p/q)")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
