use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph6 record at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("{what} exceeds the size cap ({actual} > {cap})")]
    SizeCap {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("list assignment covers {lists} vertices but the graph has {n}")]
    ListCoverage { lists: usize, n: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("no proper L-colouring exists")]
    NoColoring,

    #[error("zero denominator: the graph minus the vertex has no proper L-colouring")]
    ZeroDenominator,

    #[error("graph is not triangle-free")]
    NotTriangleFree,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ceiling still ambiguous at {precision} bits")]
    AmbiguousCeiling { precision: u32 },

    #[error("no tail certificate available for this k-specification")]
    NoTailAvailable,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
