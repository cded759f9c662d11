use alloc::string::String;

/// Errors raised by the core routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex index {0} out of range")]
    BadVertex(usize),
    #[error("arrow index {0} out of range")]
    BadArrow(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("graph is not of finite Dynkin type")]
    NotDynkin,
    #[error("search box too large: {0} points exceeds cap {1}")]
    BoxTooLarge(u64, u64),
    #[error("invalid diagram automorphism: {0}")]
    InvalidAuto(String),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("isometry sampling failed after {0} attempts")]
    SamplingExhausted(usize),
    #[error("chamber condition violated at vertex {0}")]
    Chamber(usize),
    #[error("b_i is not surjective at vertex {0}")]
    NotSurjective(usize),
    #[error("point is not on the moment-map level: {0}")]
    MomentMap(String),
    #[error("compatibility violated: {0}")]
    Compatibility(String),
    #[error("not a type A graph with the required support: {0}")]
    NotTypeA(String),
    #[error("path error: {0}")]
    Path(String),
    #[error("path table depth {0} exhausted")]
    DepthExhausted(usize),
    #[error("linear system inconsistent: {0}")]
    Inconsistent(String),
    #[error("solution not unique: {0}")]
    NotUnique(String),
    #[error("certificate failed: {0}")]
    Certificate(String),
    #[error("invalid partition data: {0}")]
    Partition(String),
    #[error("size cap exceeded: {0}")]
    Cap(String),
    #[error("key not found: {0}")]
    Lookup(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
