use thiserror::Error;

/// Errors raised by graph operations, solvers and generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    InvalidEdge(usize, usize),

    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("pattern has {0} vertices, at most {max} are supported", max = crate::graph::MAX_PATTERN_ORDER)]
    PatternTooLarge(usize),

    #[error("could not generate a graph: {0}")]
    GenerationFailed(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("parameter is undefined on this graph: {0}")]
    Infeasible(String),

    #[error("search budget exceeded: {0}")]
    ScaleLimit(String),

    #[error("vertex {0} is not a member of the set")]
    NotInSet(usize),

    #[error("semitotal domination number is already at its floor of 2")]
    Floor,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
