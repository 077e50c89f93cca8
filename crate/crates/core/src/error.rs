use thiserror::Error;

use crate::exactla::LinalgError;
use crate::report::Check;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structural error: {0}")]
    Structure(String),
    #[error("{name}: axiom {} failed", check.name)]
    Axiom { name: String, check: Box<Check> },
    #[error("no unique Haar functional: invariance solution space has dimension {0}")]
    NoUniqueHaar(usize),
    #[error("integral not faithful")]
    NotFaithful,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("dimension cap exceeded: forecast {forecast} > cap {cap}")]
    CapExceeded { forecast: usize, cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}
