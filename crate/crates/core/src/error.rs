use thiserror::Error;

/// Errors raised by the algebraic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("momentum error: {0}")]
    Momentum(String),

    #[error("zero momentum: the relative homology needs a nonzero momentum")]
    ZeroMomentum,

    #[error("zero configuration: {0}")]
    ZeroConfiguration(String),

    #[error("graph has {0} edges; at most {max} are supported", max = crate::graphhom::MAX_EDGES)]
    EdgeCap(usize),

    #[error("size limit exceeded: {0}")]
    Size(String),

    #[error("no point of corank >= {k} found after {attempts} attempts")]
    SamplingExhausted { k: usize, attempts: usize },

    /// Two independent computations of the same quantity disagreed.
    #[error("consistency check failed: {0}")]
    Check(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
