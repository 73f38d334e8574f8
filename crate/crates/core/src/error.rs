use thiserror::Error;

/// Largest vertex count a [`Graph`](crate::Graph) may have.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("graph is not distance-hereditary")]
    NotDistanceHereditary,

    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),

    #[error("invalid build sequence: {0}")]
    BuildSequence(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
