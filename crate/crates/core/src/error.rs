use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient variable sets differ")]
    AmbientMismatch,
    #[error("monomial has {found} exponents but the ambient ring has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable mapping is not injective or points outside the target ring")]
    NonInjectiveMapping,
    #[error("invalid variable set: {0}")]
    InvalidVariables(String),
    #[error("power exponent must be positive")]
    ZeroPower,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("ideal must be proper and nonzero")]
    NotProper,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("too many variables for bitset routines ({0} > 128)")]
    TooManyVariables(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("exact solver limited to {limit} vertices, got {found}")]
    TooLarge { limit: usize, found: usize },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown builtin graph {0}")]
    UnknownGraph(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// True for the resource-guard family (search budget, vertex-count guard).
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::TooLarge { .. })
    }
}
