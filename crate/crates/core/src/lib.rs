//! Exact verification and construction of Hom-algebra structures on
//! finite-dimensional algebras given by structure constants.
//!
//! Scalars are rational functions in declared parameters, so identities are
//! decided symbolically: an identity holds when every coordinate of its
//! residual on generic elements is the zero polynomial.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod identities;
pub mod io;
pub mod par;
pub mod parser;
pub mod scalar;

pub use algebra::{AlgebraError, AlgebraSpec, CheckReport, LinMap, Param, Vector, Verdict};
pub use scalar::{Polynomial, Rational, Scalar, ScalarError};
