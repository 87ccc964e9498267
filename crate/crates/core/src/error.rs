use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} (graphs are simple)")]
    Loop(usize),
    #[error("operation needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("{0} is undefined on a graph with no vertices")]
    NoVertices(&'static str),
    #[error("product factor has an empty vertex set")]
    EmptyFactor,
    #[error("graph order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("graph is disconnected; strong metric dimension needs a connected graph")]
    Disconnected,
    #[error("graph of order {order} is too small (need at least {min} vertices)")]
    TooSmall { order: usize, min: usize },
    #[error("vertex subset has capacity {got}, graph has order {expected}")]
    SubsetMismatch { expected: usize, got: usize },
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{what} = {value} exceeds guard {limit} (set STRONGDIM_MAX_N to override)")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, GraphError>;
