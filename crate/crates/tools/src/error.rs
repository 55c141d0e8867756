use std::io;

use thiserror::Error;

/// A spec file that failed to parse or validate. `path` locates the
/// offending field, e.g. `blocks[1].gram`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl SchemaError {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct YbeParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum ToolError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("invalid spec: {0}")]
    Schema(#[from] SchemaError),
    #[error("malformed YBE file: {0}")]
    Ybe(#[from] YbeParseError),
    #[error(transparent)]
    Core(#[from] brace_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, ToolError>;
