use thiserror::Error;

/// Errors surfaced by the library.
///
/// Invariant violations are deliberately loud: every one of them signals
/// either malformed input or a bug in the construction, never a tolerable
/// numerical condition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("invalid field specification: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("indeterminate at precision cap {cap} bits: {what}")]
    Indeterminate { what: String, cap: usize },

    #[error("exhaustive search box infeasible: {candidates} candidates exceed limit {limit}")]
    ExhaustiveInfeasible { candidates: u128, limit: u128 },

    #[error("bracketing failed: {0}")]
    NoSignChange(String),

    #[error("tolerance not reached after {iters} iterations; bracket [{lo}, {hi}]")]
    ToleranceNotReached { iters: u64, lo: String, hi: String },

    #[error("no nonsingular index selection within cap {cap}; construction bug")]
    SelectionFailed { cap: usize },

    #[error("value is not integral: {0}")]
    NonIntegral(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
