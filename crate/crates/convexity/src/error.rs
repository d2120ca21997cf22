use std::fmt;

/// Error type shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input file could not be parsed. `line` is 1-based; 0 means the
    /// location is not tied to a specific line.
    Parse { line: usize, msg: String },
    /// A bad argument or a violated precondition.
    Usage(String),
    /// An exact solver was asked to run above its configured cap.
    Infeasible {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line: 0, msg } => write!(f, "parse error: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Usage(msg) => write!(f, "{msg}"),
            Error::Infeasible { what, size, cap } => {
                write!(f, "{what} is infeasible: instance size {size} exceeds cap {cap}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
