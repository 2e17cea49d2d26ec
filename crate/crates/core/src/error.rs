use thiserror::Error;

use crate::cell::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cell {0} is not on the board")]
    OffBoard(Cell),
    #[error("cell {0} is not a member of the set")]
    NotMember(Cell),
    #[error("construction failed verification: {0}")]
    Verification(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
