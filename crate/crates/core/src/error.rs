//! Error type shared across the library.

use thiserror::Error;

/// Errors reported by construction, solvers, and audits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence contained a byte outside the DNA alphabet `{a, t, g, c}`
    /// (after lowercasing).
    #[error("invalid base {byte:?} at position {position}")]
    InvalidBase { byte: char, position: usize },

    /// A read with an empty sequence was supplied where a nonempty one is
    /// required.
    #[error("read {id:?} has an empty sequence")]
    EmptyRead { id: String },

    /// Two reads share the same identifier.
    #[error("duplicate read id {id:?}")]
    DuplicateReadId { id: String },

    /// A rotation index was outside `1..=len`.
    #[error("rotation index {index} out of range 1..={len}")]
    RotationOutOfRange { index: usize, len: usize },

    /// An exhaustive solver or audit was asked to handle more items than its
    /// size cap allows.
    #[error("{what}: size {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// The branch-and-bound search exhausted its node budget before proving
    /// optimality; only a best-so-far answer exists.
    #[error("search incomplete: node budget {budget} exhausted (best so far {best_length})")]
    Incomplete { budget: u64, best_length: usize },

    /// A candidate passed to `find_critical_rotation` is equivalent to the
    /// periodic string generated by the factor, which the operation excludes.
    #[error("candidate {candidate:?} is equivalent to the periodic extension of {factor:?}")]
    EquivalentCandidate { candidate: String, factor: String },

    /// A configuration field was out of range.
    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    /// A guaranteed witness could not be found; indicates a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
