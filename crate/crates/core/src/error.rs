use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(usize),

    /// An internal step of the witness construction failed. Either the
    /// implementation is wrong or the input refutes the bound; it is never
    /// swallowed.
    #[error("proof invariant violated on graph {graph}: {reason}")]
    ProofInvariantViolated { graph: String, reason: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{path}:{line}: {source}")]
    Input {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
