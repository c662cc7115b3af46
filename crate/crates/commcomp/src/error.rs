//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("not a vertex cover: edge {{{0},{1}}} has no endpoint in the set")]
    NotACover(usize, usize),
    #[error("{what} index {got} out of range 0..{len}")]
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        len: usize,
    },
    #[error("matrix {0}x{1} too large for exhaustive protocol search (limit 64x64)")]
    TooLarge(usize, usize),
    #[error("matrix has no 1-entries")]
    NoOnes,
    #[error("matrix has no 0-entries")]
    NoZeros,
    #[error("label {0} not found")]
    UnknownLabel(String),
    #[error("protocol universe does not match matrix labels: {0}")]
    UniverseMismatch(String),
    #[error("cells must be distinct")]
    DuplicateCell,
    #[error("verdict mismatch: decision procedure says {got}, vertex cover solver says {want}")]
    VerdictMismatch { got: String, want: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
