use thiserror::Error;

use crate::set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("header byte {0:#04x} is not a short-form vertex count")]
    BadHeader(u8),
    #[error("long-form graph6 (n > 62) is not supported")]
    LongForm,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    OutOfRange { byte: u8, offset: usize },
    #[error("bit field truncated: expected {expected} body bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} body bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("graph has {0} vertices; short-form graph6 holds at most 62")]
    TooLarge(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {v} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not bipartite (odd cycle through vertex {0})")]
    NotBipartite(usize),
    #[error("vertex {0} is isolated; an edge cover does not exist")]
    IsolatedVertex(usize),
    #[error("the vertex set is empty")]
    EmptySet,
    #[error("not a zero forcing set: closure stalls with blue = {blue:?}")]
    NotForcingSet { blue: VertexSet },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{solver} exceeded its time budget")]
    BudgetExceeded { solver: &'static str },
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
