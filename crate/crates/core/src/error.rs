use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("twins: {0},{1}")]
    Twins(usize, usize),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("instance size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("vertex set is not shattered")]
    NotShattered,

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("element {element} is not covered")]
    NotACover { element: usize },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("degenerate instance: {0}")]
    Degenerate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
