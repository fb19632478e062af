//! Algebras as structure constants, linear maps, and the constructions on
//! them: Yau twist, untwist, opposite, polarization, and morphism,
//! endomorphism, subalgebra and unit certificates.

mod linmap;
mod ops;
mod report;
mod spec;
mod vector;

use thiserror::Error;

pub use linmap::{Echelon, LinMap};
pub use ops::{
    apply_map, check_unit, compose, identity, invert, is_endomorphism, is_morphism, is_subalgebra,
    opposite, polarize, untwist, yau_twist, yau_twist_unchecked,
};
pub(crate) use report::witness_from;
pub use report::{Assumptions, CheckReport, Verdict, Witness};
pub use spec::{AlgebraSpec, Param};
pub use vector::Vector;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("map is singular")]
    SingularMap,
    #[error("algebra has no twisting map")]
    MissingTwistMap,
    #[error("map is not an algebra endomorphism")]
    NotEndomorphism(Box<CheckReport>),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("structure constant ({i}, {j}, {k}) given twice")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("basis label `{0}` repeated")]
    DuplicateLabel(String),
    #[error("parameter `{0}` is not declared")]
    UndeclaredParameter(String),
    #[error("algebra must have at least one basis vector")]
    EmptyBasis,
}
