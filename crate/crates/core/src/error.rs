use thiserror::Error;

use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} is out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },

    #[error("loop on node {0}")]
    SelfLoop(NodeId),

    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(NodeId, NodeId),

    /// Malformed or inconsistent input data (weights, parameters, sources).
    #[error("invalid input: {0}")]
    Input(String),

    /// The graph does not belong to the class an algorithm requires.
    #[error("structure mismatch: {0}")]
    Structure(String),

    /// The request exceeds a configured resource cap.
    #[error("refused: {0}")]
    Refused(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}
