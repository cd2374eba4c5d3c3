use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular matrix")]
    Singular,
    #[error("degenerate sample: retry budget exhausted")]
    Degenerate,
    #[error("letter {0} does not occur in the word")]
    MissingLetter(usize),
    #[error("exponent vector must be regular (all entries positive)")]
    NotRegular,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
