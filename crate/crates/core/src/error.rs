use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("header declares {declared} edges but {found} distinct edges were listed")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooLarge { n: usize, max: usize },

    #[error("{what}: limit is {limit}, got {got}")]
    Guard { what: &'static str, limit: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),

    #[error("invalid flip: {0}")]
    InvalidFlip(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("round {round}: illegal move by {player}: {msg}")]
    IllegalMove { round: usize, player: &'static str, msg: String },

    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Returns a guard error when `got > limit`.
pub(crate) fn guard(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::Guard { what, limit, got })
    } else {
        Ok(())
    }
}
