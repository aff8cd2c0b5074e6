use thiserror::Error;

/// Errors raised by the toolkit. Verification failures are never errors;
/// they are reported as data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph would have {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertices must be distinct, got {0} twice")]
    RepeatedVertex(usize),

    #[error("{0:?} does not induce a 5-cycle in the given cyclic order")]
    NotPentagon(Vec<usize>),

    #[error("graph contains no induced 5-cycle")]
    NoInducedC5,

    #[error("multiplicity vector has length {got}, base graph has {expected} vertices")]
    MultiplicityLength { expected: usize, got: usize },

    #[error("invalid blow-up tree at byte {offset}: {reason}")]
    TreeSpec { offset: usize, reason: String },

    #[error("program is infeasible: {0}")]
    Infeasible(String),

    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
