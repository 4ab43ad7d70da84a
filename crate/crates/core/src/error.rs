use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("order {order} is not supported here (limit {limit})")]
    UnsupportedOrder { order: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("walk matrix of {which} is singular")]
    SingularWalkMatrix { which: &'static str },

    #[error("graphs are not generalized cospectral")]
    NotCospectral,

    #[error("graphs in the corpus have mixed orders ({first} and {other})")]
    MixedOrders { first: usize, other: usize },

    #[error("malformed certificate document: {0}")]
    Certificate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
