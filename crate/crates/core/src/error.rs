use thiserror::Error;

use crate::model::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Unicode scalar value {0:#X}")]
    InvalidCodePoint(u32),

    #[error("malformed code point `{0}` (expected U+XXXX, 4-6 uppercase hex digits)")]
    MalformedCodePoint(String),

    #[error("unknown KeyId `{0}`")]
    UnknownKeyId(String),

    #[error("unknown mode `{0}`")]
    UnknownMode(String),

    #[error("register {0} is a base register and is never a placement slot")]
    BaseRegister(u8),

    #[error("unknown keysym `{0}`")]
    UnknownKeysym(String),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("unknown validation profile `{0}`")]
    UnknownProfile(String),

    #[error("layout `{layout}` is in {found} mode, expected {expected}")]
    ModeMismatch {
        layout: String,
        expected: Mode,
        found: Mode,
    },

    #[error("bad event token `{0}` (expected [S+][L3+][CL+]<KEY>)")]
    BadEvent(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Attaches a line number to a token-level error.
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            e @ Error::Parse { .. } => e,
            other => Error::parse(line, other.to_string()),
        }
    }
}
