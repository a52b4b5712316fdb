use thiserror::Error;

use crate::tableaux::ColoredTableau;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid hook: d = {d} must satisfy d < n = {n}")]
    InvalidHook { n: usize, d: usize },

    #[error("parse error: {0}")]
    Parse(String),

    /// Cells do not match the declared skew shape, or a row/column breaks
    /// the ordering rules when validity was required.
    #[error("malformed tableau: {0}")]
    Structure(String),

    /// A tableau was not semistandard for the order an operation expects.
    #[error("tableau is not semistandard for the {expected} order: {detail}")]
    InvalidOrder { expected: &'static str, detail: String },

    #[error("conversion failed: {reason}")]
    Conversion {
        reason: String,
        trace: Box<Vec<ColoredTableau>>,
    },

    #[error("query error: {0}")]
    Query(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
