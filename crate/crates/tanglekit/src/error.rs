//! Crate-wide error type. Check *findings* (violated laws in a certificate)
//! are not errors; they are report content. Errors are for inputs the
//! operations cannot meaningfully process at all.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("instance too large: {size} vertices exceeds cap {cap}")]
    InstanceTooLarge { size: usize, cap: usize },

    #[error("pair (A, B) is not a separation of the graph")]
    NotASeparation,

    #[error("apex set of size {apex} too large for tangle of order {order}")]
    ApexTooLarge { apex: usize, order: usize },

    #[error("minor model is invalid: {0}")]
    InvalidModel(String),

    #[error("vortex index {index} out of range ({count} large vortices)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("alpha must be at least 2, got {0}")]
    AlphaTooSmall(usize),

    #[error("parameter {name} must be at least 1")]
    ParameterOutOfRange { name: &'static str },

    #[error("graph too small: need at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
