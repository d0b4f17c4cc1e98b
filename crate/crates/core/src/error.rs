use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// The partition cannot be reduced to `∅` by `r`-ribbons; `core` is what remains.
    #[error("{partition} has nonempty {r}-core {core}")]
    NonEmptyCore {
        partition: Partition,
        r: usize,
        core: Partition,
    },
}

impl Error {
    pub(crate) fn parse(token: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}
