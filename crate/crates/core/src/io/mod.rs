//! Algebra files and verification reports.

mod file;
mod report;

use std::path::Path;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::parser::ParseError;

pub use file::{
    load, load_str, save, to_string, AlgebraFile, Loaded, ParamEntry, ProductEntry, ALPHA,
};
pub use report::{Record, Report};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IoError {
    #[error("cannot read {path}: {reason}")]
    Read { path: String, reason: String },
    #[error("cannot write {path}: {reason}")]
    Write { path: String, reason: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: {error}")]
    Expression { context: String, error: ParseError },
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{path}: {inner}")]
    InFile { path: String, inner: Box<IoError> },
}

impl IoError {
    pub(crate) fn in_file(self, path: &Path) -> IoError {
        IoError::InFile {
            path: path.display().to_string(),
            inner: Box::new(self),
        }
    }
}
