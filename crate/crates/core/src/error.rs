use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc collection is empty")]
    EmptyCollection,
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("index {index} out of range for {len} items")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("negative {what}: {value}")]
    Negative { what: &'static str, value: String },
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("invalid vertex {vertex} (vertex count {count})")]
    InvalidVertex { vertex: usize, count: usize },
    #[error("dimension {dim} out of range (max {max})")]
    DimensionOutOfRange { dim: usize, max: isize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("oracle caps exceeded: {what} is {value}, cap {cap}")]
    CapsExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex map is not simplicial: image of {0:?} is not a simplex")]
    NotSimplicial(Vec<usize>),
    #[error("homology in dimension {dim} has torsion {torsion:?}")]
    Torsion { dim: usize, torsion: Vec<String> },
    #[error("homology in dimension {dim} has rank {rank}, expected 1")]
    RankNotOne { dim: usize, rank: usize },
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("removal log inconsistent with collection: {0}")]
    InconsistentLog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
