use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),

    #[error("operation requires a proper nonzero ideal, got {0}")]
    NotProper(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("ideal has no generators: {0}")]
    EmptyIdeal(String),

    #[error("exponent overflow (limit {})", u32::MAX)]
    ExponentOverflow,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("corpus error: {0}")]
    Corpus(String),
}
