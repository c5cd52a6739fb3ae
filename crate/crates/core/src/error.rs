use thiserror::Error;

/// Errors raised by the library and surfaced by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("not a dipath in the condensation: {0}")]
    NotADipath(String),

    #[error("set is not {kind}-reaching: `{unreached}` is not reached")]
    NotReaching {
        kind: &'static str,
        unreached: String,
    },

    #[error("set is not a point-basis: {0}")]
    NotABasis(String),

    #[error("{what} exceeds capacity: {size} > {cap}")]
    Capacity {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("{family} has no unique point-basis ({count} bases)")]
    NonUniqueBasis { family: &'static str, count: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
