use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} is {got}, at most {max} supported")]
    Capacity {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("invalid edge {{{u}, {v}}}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("{0}")]
    Domain(String),

    #[error("record {index} (line {line}): {source}")]
    Record {
        index: usize,
        line: usize,
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(String),

    /// A hand-derived witness set failed to induce the expected path.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
