use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::GuardExceeded { what, limit, actual }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
