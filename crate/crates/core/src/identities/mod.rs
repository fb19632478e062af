//! Identities over algebras: expression trees, exact evaluation, and
//! universal checks by generic elements or basis tuples.

mod ast;
mod builtin;
mod check;
mod eval;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use ast::{Expr, IdentityAST, Sign};
pub use builtin::{all_builtins, builtin, builtin_names, BuiltinIdentity, BUILTIN_NAMES};
pub use check::{check, check_bound, find_counterexample, Strategy};
pub use eval::{
    evaluate, generic_coordinate_name, generic_element, hom_associator, is_generic_coordinate,
    render_residual, Evaluator,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityError {
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("identity uses alpha but the algebra has no twisting map")]
    MissingTwistMap,
    #[error("basis strategy needs a multilinear identity: {0}")]
    NotMultilinear(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("x and y do not anticommute")]
    NotAnticommuting,
    #[error("too many basis tuples")]
    TooManyTuples,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
