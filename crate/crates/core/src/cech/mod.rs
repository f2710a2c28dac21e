//! Čech cohomology of cover nerves with constant coefficients, relative
//! cohomology of a refinement map, and gerbe cocycles.
//!
//! Nerves are combinatorial only; whether the cover is good is the caller's
//! assertion.

mod cochain;
pub mod gerbe;
pub mod nerve;

pub use cochain::{CechCochain, CochainEntry, CochainSpec};
pub use gerbe::{
    bockstein, bockstein_preimage, cech_cohomology, relative_cech_cohomology, relative_cocone, CohomologyClass,
    GerbeCocycle, RelativeClass, RelativeGerbeCocycle,
};
pub use nerve::{CoverMap, Nerve};

use crate::algebra::AlgebraError;
use crate::chain::{ChainError, Coefficients};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CechError {
    #[error("index {0} is not in the cover")]
    UnknownIndex(usize),
    #[error("intersecting family of size {0} is too large to expand")]
    FamilyTooLarge(usize),
    #[error("refinement sends {family:?} to {image:?}, which does not intersect")]
    NotARefinement { family: Vec<usize>, image: Vec<usize> },
    #[error("family {0:?} is not a simplex of the nerve")]
    UnknownSimplex(Vec<usize>),
    #[error("degree {degree} cochain needs {expected} values, found {found}")]
    CochainLength { degree: usize, expected: usize, found: usize },
    #[error("expected {expected} coefficients, found {found}")]
    Coefficients { expected: Coefficients, found: Coefficients },
    #[error("not integral: {0}")]
    NotIntegral(String),
    #[error("not a cocycle in degree {degree}")]
    NotACocycle { degree: i64 },
    #[error("pullback of the target data differs from δ of the source data mod ℤ")]
    RelativeCondition,
    #[error("{0}")]
    Inconsistent(&'static str),
    #[error("{0}")]
    Schema(String),
    #[error("unknown builtin nerve `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
