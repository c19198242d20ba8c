//! Error type shared by every module.

use thiserror::Error;

/// Failures surfaced by the library.
///
/// Empty critical sets are values, not errors. Errors are reserved for inputs
/// outside an operation's domain and for Gamma poles hit by a ratio that the
/// caller expected to be finite.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the operation's domain (not a root, non-integral weight, bad permutation, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// The pairs of a weight do not share one purity weight.
    #[error("weight is not pure: pair {index} has a+b* = {lhs} but b+a* = {rhs} (expected {expected})")]
    NotPure {
        index: usize,
        lhs: i64,
        rhs: i64,
        expected: i64,
    },
    /// A pair is not dominant for the Levi factor (needs a >= b and a* >= b*).
    #[error("pair {index} is not Levi-dominant: {detail}")]
    NotDominant { index: usize, detail: String },
    /// A Gamma factor that should be finite and nonzero has a pole.
    #[error("degenerate Gamma ratio: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
