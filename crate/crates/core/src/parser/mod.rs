//! Recursive-descent parsers for scalar expressions and identities.

mod identity;
mod lexer;
mod scalar;
mod vector;

use std::fmt;

use thiserror::Error;

pub use identity::{parse_identity, parse_identity_expr};
pub use scalar::parse_scalar_expr;
pub use vector::parse_vector;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Position {
    /// Byte offset into the input.
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("{position}: expected {expected}, found {found}")]
    Unexpected {
        position: Position,
        expected: String,
        found: String,
    },
    #[error("{position}: undeclared parameter `{name}`")]
    UndeclaredParameter { position: Position, name: String },
    #[error("{position}: `{name}` takes {expected} argument(s), found {found}")]
    Arity {
        position: Position,
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("{position}: division by zero")]
    DivisionByZero { position: Position },
    #[error("{position}: exponent must be at most {MAX_EXPONENT}")]
    ExponentTooLarge { position: Position },
}

impl ParseError {
    pub fn position(&self) -> Position {
        match self {
            ParseError::Unexpected { position, .. }
            | ParseError::UndeclaredParameter { position, .. }
            | ParseError::Arity { position, .. }
            | ParseError::DivisionByZero { position }
            | ParseError::ExponentTooLarge { position } => *position,
        }
    }
}
