use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} outside 1..={max}", max = crate::graph::MAX_ORDER)]
    Order(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("edge ({u}, {v}) listed twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("map {name} is not available for {id}")]
    UnavailableMap { name: String, id: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
