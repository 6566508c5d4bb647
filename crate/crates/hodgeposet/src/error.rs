use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("search budget of {limit} nodes exceeded in {what}")]
    Budget { what: String, limit: u64 },
    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("size mismatch: {0}")]
    Mismatch(String),
    #[error("ambiguous classification, candidates: {0:?}")]
    Ambiguous(Vec<String>),
    #[error("singular linear system")]
    Singular,
    #[error("output closed")]
    OutputClosed,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Mismatch(_) | Error::Parity(_) => 2,
            Error::Unsupported(_) => 3,
            Error::Budget { .. } => 4,
            Error::FixtureMismatch(_) => 5,
            Error::Invariant(_) | Error::Ambiguous(_) | Error::Singular => 1,
            Error::OutputClosed => 0,
        }
    }
}
