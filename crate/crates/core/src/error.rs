use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid nucleotide '{symbol}' at {location}")]
    InvalidSymbol { symbol: char, location: String },

    #[error("brute-force oracle refuses length {len} (cap is {cap})")]
    OracleScaleExceeded { len: usize, cap: usize },

    #[error("matrix cell ({row}, {col}) has not been filled")]
    UnfilledMatrix { row: usize, col: usize },

    #[error("malformed input {path}: {reason}")]
    Parse { path: String, reason: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit status for the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) => 1,
            Error::Io { .. } => 3,
            _ => 2,
        }
    }
}
