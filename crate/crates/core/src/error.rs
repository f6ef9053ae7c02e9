use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for rank {rank}")]
    Range { index: usize, rank: usize },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("capacity exceeded: {what} (cap {cap}, requested {requested})")]
    Capacity {
        what: &'static str,
        cap: usize,
        requested: usize,
    },

    #[error("arity error: {0}")]
    Arity(String),

    #[error("unbound variable {0}")]
    Binding(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unsupported highest weight family: {0}")]
    UnsupportedFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
