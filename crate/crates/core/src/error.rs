use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    /// The socle consumes the whole algebra before the socle degree.
    #[error("infeasible pair: no room left at degree {degree}")]
    Infeasible { degree: usize },

    #[error("enumeration budget exceeded: socle degree {requested} > limit {limit}")]
    BudgetExceeded { requested: usize, limit: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("inconsistent variable counts: expected {expected}, found {found} on line {line}")]
    InconsistentVariables {
        expected: usize,
        found: usize,
        line: usize,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
