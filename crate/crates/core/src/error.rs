use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pattern must be non-empty")]
    EmptyPattern,
    #[error("input too large for brute force: |A| = {len}, limit is {limit}")]
    InputTooLarge { len: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
