use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime >= 5")]
    InvalidPrime(u64),

    #[error("mismatched characteristic: {0} vs {1}")]
    MismatchedPrime(u32, u32),

    #[error("mismatched parameters: {0}")]
    Mismatch(String),

    #[error("index {index} out of range {lo}..={hi}")]
    OutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
