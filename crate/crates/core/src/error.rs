use crate::NodeId;

/// Errors produced by graph construction, metrics, fitting and simulation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: self-loop on node {node}")]
    SelfLoop { line: usize, node: NodeId },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown node id {0}")]
    UnknownNode(NodeId),

    #[error("APL undefined: no pair of nodes is connected")]
    AplUndefined,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("need at least {needed} positive values, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("degenerate sample: all values are equal")]
    DegenerateSample,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
