//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator tuple must not be empty")]
    EmptyTuple,

    #[error("generators must be positive, got {value}")]
    NonPositiveGenerator { value: u64 },

    #[error("generator tuple must have gcd 1, got gcd {gcd}")]
    GcdNotOne { gcd: u64 },

    #[error("table limit {limit} exceeds the entry budget {budget}")]
    LimitTooLarge { limit: u64, budget: u64 },

    #[error("scan passed the hard limit {limit} without stabilising")]
    HardLimitExceeded { limit: u64 },

    #[error("pivot index {pivot} out of range for a tuple of length {len}")]
    PivotOutOfRange { pivot: usize, len: usize },

    #[error("reduction needs at least two generators, got {len}")]
    KTooSmall { len: usize },

    #[error("{a1} and {a2} are not coprime")]
    NotCoprime { a1: u64, a2: u64 },

    #[error("cannot shift a value of {value} by {offset}: result would not be positive")]
    InvalidShift { value: u64, offset: u64 },

    #[error("oracle scanned up to {scanned} without reaching its stopping window")]
    ScanIncomplete { scanned: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
