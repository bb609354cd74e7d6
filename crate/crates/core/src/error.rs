use thiserror::Error;

/// Errors raised by graph construction and the colouring algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("positive loop at vertex {0}")]
    PositiveLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs do not share the same labelled underlying edge multiset")]
    UnderlyingMismatch,
    #[error("colour set size must be positive")]
    NonPositiveN,
    #[error("vertex order is not a permutation of the vertex set")]
    InvalidOrder,
    #[error("colouring has {got} entries but the graph has {expected} vertices")]
    ColouringLength { expected: usize, got: usize },
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph is not connected")]
    NotConnected,
    #[error("underlying graph is not complete")]
    NotComplete,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal bound exceeded: {0}")]
    InternalBoundExceeded(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid forest pair: {0}")]
    InvalidForestPair(String),
    #[error("not an acyclic colouring: {0}")]
    NotAcyclic(String),
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("enumeration of {requested} vertices exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
