use thiserror::Error;

use crate::intervals::Interval;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("p = {p} out of range: expected 0 <= p <= {max} (c = {c})", max = .c - 1)]
    POutOfRange { p: i64, c: usize },

    #[error("invalid type-{kind} partition {parts:?}: {reason}")]
    InvalidOrbit {
        kind: char,
        parts: Vec<usize>,
        reason: String,
    },

    #[error("{0} is not an element of the canonical quotient")]
    NotAnElement(String),

    #[error("simple root index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: usize },

    #[error("invalid interval set: {0}")]
    InvalidIntervalSet(String),

    #[error("basic move on {target}: {violation}")]
    Move {
        target: Interval,
        violation: MoveViolation,
    },

    #[error("{lemma} hypothesis violated: {hypothesis}")]
    Hypothesis {
        lemma: &'static str,
        hypothesis: String,
    },

    #[error("{lemma}, move {index}: {source}")]
    Expansion {
        lemma: &'static str,
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("replay failed at {locus}: {source}")]
    Replay {
        locus: String,
        #[source]
        source: Box<Error>,
    },

    #[error("refusing to enumerate {count} monomials (limit {limit})")]
    TooManyMonomials { count: u128, limit: u128 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

/// Why a basic move was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveViolation {
    #[error("target is not a minimal interval of the source subspace")]
    NotMinimal,
    #[error("target lies outside the roots of GL({n})")]
    TargetOutOfRange { n: usize },
    #[error("stabilizing index {index} is not a simple root")]
    SideOutOfRange { index: i64 },
    #[error("subspace is not {index}-stable")]
    NotStable { index: usize },
    #[error("target root is already in the source subspace")]
    AlreadyPresent,
    #[error("adding the target changes the subspace by more than one root")]
    NotSingleRoot,
}
