use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input supplied by the caller.
    #[error("invalid input: {0}")]
    Input(String),

    /// A brute-force oracle was asked to run beyond its size budget.
    #[error("refused: {what} has {actual} (limit {limit}); pass an override to run anyway")]
    Refused {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A file could be read but its contents are not valid.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
