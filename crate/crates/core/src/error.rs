use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group axiom violated: {0}")]
    GroupAxiom(String),
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
    #[error("rank mismatch: expected rank {expected}, found generator {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unresolved twist `{0}`")]
    UnresolvedTwist(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("conflicting assignments for variable `{0}`")]
    ConflictingAssignment(String),
    #[error("assignment cap exceeded: {needed} assignments needed, cap is {cap}")]
    AssignmentCap { needed: u128, cap: u128 },
    #[error("excluded subset covers the whole parameter space")]
    NotProper,
    #[error("sublattice not invariant: {0}")]
    NotInvariant(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("orbit not closed: {0}")]
    OrbitNotClosed(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid group file: {0}")]
    GroupFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
