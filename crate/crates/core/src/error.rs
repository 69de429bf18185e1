use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(Vertex, Vertex),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("not a walk: {0}")]
    NotAWalk(String),

    #[error("not a path: {0}")]
    NotAPath(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex sets overlap in vertex {0}")]
    OverlappingVertices(Vertex),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ideal carries no Gröbner basis for the requested term order")]
    MissingGroebnerBasis,

    #[error("invariant violated: {0}")]
    InvariantBreach(String),

    #[error("unknown example id `{0}`")]
    UnknownExample(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
