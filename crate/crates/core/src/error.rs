use thiserror::Error;

/// Errors produced across the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("invalid cube spec: {0}")]
    InvalidSpec(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("drawing is not good: {0}")]
    NotGood(String),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
