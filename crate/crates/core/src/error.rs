use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex label `{0}`")]
    InvalidLabel(String),
    #[error("vertex label `{0}` declared twice")]
    DuplicateLabel(String),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("unknown vertex `{0}`")]
    UnknownLabel(String),
    #[error("no edge `{0}` in graph")]
    UnknownEdge(String),
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("edge {0}-{1} joins two vertices of the same part")]
    BipartitionViolation(String, String),
    #[error("bipartition covers {got} vertices, graph has {expected}")]
    BipartitionSize { expected: usize, got: usize },
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("instance too large for exhaustive search: {got} > {limit}")]
    TooLarge { limit: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("edge {0}-{1} violates the declared bipartition")]
    BipartitionViolation(String, String),
    #[error("vertex `{0}` is not declared in any part")]
    UnknownVertex(String),
    #[error("label `{0}` placed in a part twice")]
    DuplicatePartLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Failures of the analyses built on top of [`crate::Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph has no perfect matching")]
    NotMatchable,
    #[error("graph is not matching-covered")]
    NotMatchingCovered,
    #[error("graph has no bipartition")]
    NotBipartite,
    #[error("graph is not connected")]
    Disconnected,
    #[error("perfect matching enumeration truncated at {limit}; verdict would be unreliable")]
    Truncated { limit: usize },
    #[error("instance too large: {got} > {limit}")]
    TooLarge { limit: usize, got: usize },
    #[error("digraph has a directed cycle")]
    Cyclic,
    #[error("edge sets belong to different graphs")]
    HostMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
