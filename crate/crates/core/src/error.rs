use alloc::string::String;
use core::fmt;

/// Errors produced by the algorithmic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside the operation's domain.
    InvalidArgument(String),
    /// A multiplication table violates a group axiom; `triple` holds the offending elements.
    GroupAxiom { axiom: &'static str, triple: [usize; 3] },
    /// A connection matrix violates its invariants.
    InvalidMatrix(String),
    /// A computation would exceed a configured size cap.
    Capacity { what: &'static str, limit: u128, requested: u128 },
    /// A structured search found no object with the requested property.
    NotFound(String),
    /// A transcribed construction failed the check that its source asserts.
    Discrepancy { source: &'static str, detail: String },
    /// A precondition of a construction does not hold.
    Precondition(String),
    /// A produced witness failed re-verification.
    Verification(String),
    /// A randomized generator exhausted its retry budget.
    RetryBudget { seed: u64, attempts: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::GroupAxiom { axiom, triple } => write!(
                f,
                "group axiom violated ({axiom}) at elements ({}, {}, {})",
                triple[0], triple[1], triple[2]
            ),
            Error::InvalidMatrix(msg) => write!(f, "invalid connection matrix: {msg}"),
            Error::Capacity { what, limit, requested } => {
                write!(f, "capacity exceeded for {what}: requested {requested}, limit {limit}")
            }
            Error::NotFound(msg) => write!(f, "not found: {msg}"),
            Error::Discrepancy { source, detail } => {
                write!(f, "DISCREPANCY in {source}: {detail}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Verification(msg) => write!(f, "verification failed: {msg}"),
            Error::RetryBudget { seed, attempts } => write!(
                f,
                "retry budget exhausted after {attempts} attempts (seed {seed})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
