use std::io;

use thiserror::Error;

use crate::cube::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} out of range: {value} (limit {limit})")]
    Range {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("coset representative rejected: {0}")]
    Restriction(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("bad file format: {0}")]
    Format(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
