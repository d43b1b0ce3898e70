use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible field: sqrt({0}) vs sqrt({1})")]
    IncompatibleField(u64, u64),
    #[error("window too small: need n <= N, got n = {n}, N = {window}")]
    WindowTooSmall { n: usize, window: usize },
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("corridor criterion is binary-only (alphabet has {0} letters)")]
    NotBinary(usize),
    #[error("directive window exhausted after {consumed} letters; prefix reached only {reached} of {wanted}; use a longer directive window")]
    DirectiveExhausted {
        consumed: usize,
        reached: usize,
        wanted: usize,
    },
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidSpec(msg.into()))
}
