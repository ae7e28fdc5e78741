use thiserror::Error;

use crate::verify::Violation;

/// Errors produced by sequence construction, verification and realization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("C({p}, {q}) does not fit in 64 bits")]
    ArithmeticOverflow { p: u64, q: u64 },

    #[error("prefix sum exceeds the 64-bit range")]
    PrefixSumOverflow,

    #[error("arc size k must be at least 2, got {k}")]
    InvalidArcSize { k: usize },

    #[error("sequence is not non-decreasing at index {index}")]
    SequenceNotSorted { index: usize },

    #[error("declared length n = {n} does not match {len} values")]
    LengthMismatch { n: usize, len: usize },

    #[error("could not parse `{token}` as a non-negative integer")]
    ParseValue { token: String },

    #[error("entry {value} at index {index} exceeds C(n-1, k-1) = {max}")]
    EntryOutOfRange { index: usize, value: u64, max: u64 },

    #[error("operation is defined for k = 2 only, got k = {k}")]
    WrongK { k: usize },

    #[error("malformed hypertournament: {reason}")]
    MalformedHypertournament { reason: String },

    #[error("invariant violation: {reason}")]
    InvariantViolation { reason: String },

    #[error("vertex {vertex} does not occur in the arc")]
    VertexNotInArc { vertex: usize },

    #[error("sequence fails the losing score characterization at j = {}", violation.j)]
    InfeasibleSequence { violation: Violation },

    #[error("no integral cross-loss distribution realizes the split")]
    NoValidDistribution,

    #[error("no exchange transfers a loss from vertex {donor} to vertex {receiver}")]
    NoExchangeFound { donor: usize, receiver: usize },

    #[error("arc [{arc}] is not present in the hypertournament")]
    ArcNotPresent { arc: String },

    #[error("precondition violation: {reason}")]
    PreconditionViolation { reason: String },

    #[error("k^C(n, k) = {count} assignments exceed the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
