use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop edge on vertex {0}")]
    LoopEdge(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("ordering is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),
    #[error("ordering is not a perfect elimination ordering (vertex {0} is not simplicial among its successors)")]
    NotAPeo(VertexId),
    #[error("sequence is not a stationary perfectly nested sequence: {0}")]
    InvalidSequence(String),
    #[error("vertex set is not stalled: {0}")]
    NotStalled(String),
    #[error("input too large for exhaustive search: {what} is {actual}, limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("orientation contains a directed cycle")]
    CyclicInput,
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("improper coloring: adjacent vertices {0} and {1} share a color")]
    ImproperColoring(VertexId, VertexId),
    #[error("bad size: {0}")]
    BadSize(String),
    #[error("bad probability {0}: must lie in [0, 1]")]
    BadProbability(f64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
