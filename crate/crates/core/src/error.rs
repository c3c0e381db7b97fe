use thiserror::Error;

/// Errors raised by the enumeration engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constructor or formula received parameters outside its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An operation needed a shape with a property the input lacks.
    #[error("shape error: {0}")]
    Shape(String),

    /// A matrix did not have the structure an evaluator requires.
    #[error("structural error: {0}")]
    Structure(String),

    /// A brute-force computation would exceed its configured budget.
    #[error("resource limit exceeded: {what} needs {needed}, budget is {budget}")]
    Resource {
        what: &'static str,
        needed: usize,
        budget: usize,
    },

    /// The operation does not apply to the given input (e.g. missing provenance).
    #[error("usage error: {0}")]
    Usage(String),

    /// A product formula that must be an integer evaluated to a proper fraction.
    #[error("non-integral value {value} from {formula}")]
    NonIntegral { formula: &'static str, value: String },

    /// Reading or writing a file failed.
    #[error("i/o error: {0}")]
    Io(String),

    /// Two routes to the same quantity disagreed.
    #[error("identity mismatch in {identity}: {lhs} != {rhs}")]
    Mismatch {
        identity: &'static str,
        lhs: String,
        rhs: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
