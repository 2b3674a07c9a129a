use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("{n} vertices exceeds the capacity of {cap}")]
    CapacityExceeded { n: usize, cap: usize },
    #[error("common neighbourhood of an empty vertex set is undefined")]
    EmptyVertexSet,
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("expected a {expected}-clique, got {actual} vertices")]
    WrongCliqueSize { expected: usize, actual: usize },
    #[error("pattern has {have} dominating vertices, {need} required")]
    TooFewDominating { need: usize, have: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed graph6: {0}")]
    Graph6(&'static str),
    #[error("zero denominator: {0}")]
    ZeroDenominator(&'static str),
    #[error("subgraph is not a copy of the pattern")]
    NotACopy,
    #[error("weight undefined: no copy of the reduced pattern in T_{r}({n})")]
    WeightUndefined { r: usize, n: usize },
    #[error("no composition of the components has exactly {0} cliques")]
    Unreachable(usize),
    #[error("search limit exceeded: {0}")]
    SearchCap(String),
}
