use thiserror::Error;

/// Errors raised by the algebra engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("colon by the zero ideal")]
    ColonByZero,

    #[error("quotient has infinite length (ideal is not m-primary)")]
    InfiniteLength,

    #[error("the ring is zero (unit ideal); {0} is undefined")]
    ZeroRing(&'static str),

    #[error("ideal is not m-primary")]
    NotPrimary,

    #[error("no truncation certificate up to level {0}")]
    NotCertified(u32),

    #[error("{what} did not stabilize within {bound} steps")]
    NotStabilized { what: &'static str, bound: u32 },

    #[error("not a reduction within n-bound {0}")]
    NotAReduction(u32),

    #[error("containment violated: {0}")]
    Containment(&'static str),

    #[error("Valabrega-Valla certificate failed; G(I) not certified Cohen-Macaulay")]
    NotCohenMacaulay,

    #[error("invalid numerical semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("empty semigroup ideal")]
    EmptyIdeal,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
