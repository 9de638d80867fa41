use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("vertex count {n} outside supported range {min}..={max}")]
    VertexCount { n: usize, min: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is acyclic (infinite girth)")]
    Acyclic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is a cycle; use the closed-form cycle count instead")]
    CycleGraph,
    #[error("vertices {0:?} do not form a cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error("degenerate interval ({a}, {b}]")]
    DegenerateInterval { a: String, b: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("I/O: {0}")]
    Io(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("invalid character {ch:?} at position {pos}")]
    BadChar { pos: usize, ch: char },
    #[error("malformed size header")]
    BadHeader,
    #[error("vertex count {0} out of range 1..=64")]
    OutOfRange(usize),
    #[error("expected {expected} body bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    TrailingBits,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
