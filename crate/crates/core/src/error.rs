use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("unknown edge id {0}")]
    UnknownEdgeId(usize),
    #[error("no edge between {u} and {v}")]
    UnknownEdge { u: usize, v: usize },
    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("weight of vertex {vertex} is not positive")]
    NonPositiveWeight { vertex: usize },
    #[error("edge blocks do not partition the edge set: {0}")]
    NotAPartition(String),
    #[error("Theta*-class {class} ({edges}) is split across blocks")]
    ClassSplit { class: usize, edges: String },
    #[error("partition covers {found} edges but the graph has {expected}")]
    PartitionMismatch { expected: usize, found: usize },
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("graph is not a partial Hamming graph")]
    NotPartialHamming,
    #[error("graph is not a tree")]
    NotATree,
    #[error("input is not a phenylene; give a hexagon placement or a chain")]
    NotAPhenylene,
    #[error("invalid placement: {0}")]
    InvalidPlacement(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Coarse grouping used for exit and status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input.
    Input,
    /// Well-formed input outside the method's domain.
    Inapplicable,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NonPositiveWeight { .. }
            | Error::NotPartialCube
            | Error::NotPartialHamming
            | Error::NotATree
            | Error::NotAPhenylene => ErrorKind::Inapplicable,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
