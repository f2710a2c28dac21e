//! Chain and cochain complexes, chain maps, mapping cones and the exact
//! sequences around them.

mod complex;
pub mod cone;
pub mod dual;
pub mod les;
mod map;
pub mod random;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use complex::{ChainComplex, Coefficients, Grading, HomologyGroup};
pub use cone::{
    connecting_map_check, homotopy_cone_iso, is_quasi_iso, mapping_cocone, mapping_cone, relative_homology,
    ConeComplex, ConnectingImage,
};
pub use dual::{adjunction_sides, compare_dual_cone, dualize, DualConeReport};
pub use les::{cone_sequence_exactness, ker_coker_sequence, ExactnessReport, KerCokerReport, SlotCheck};
pub use map::{ChainMap, HomotopyOperator};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("expected {expected} differentials, found {found}")]
    LinkCount { expected: usize, found: usize },
    #[error("{what} at degree {degree}: expected shape {expected:?}, found {found:?}")]
    Shape {
        what: &'static str,
        degree: i64,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("differentials compose to a nonzero map at degree {degree}")]
    NotAComplex { degree: i64 },
    #[error("square does not commute at degree {degree}")]
    NotAChainMap { degree: i64 },
    #[error("h∂ + ∂h ≠ f − g at degree {degree}")]
    NotAHomotopy { degree: i64 },
    #[error("degree {degree} outside the range {lo}..={hi}")]
    DegreeOutOfRange { degree: i64, lo: i64, hi: i64 },
    #[error("source and target have different gradings")]
    GradingMismatch,
    #[error("operation needs {expected:?} grading")]
    WrongGrading { expected: Grading },
    #[error("maps do not have matching source and target")]
    NotComposable,
    #[error("vector in degree {degree} has length {found}, expected {expected}")]
    VectorLength { degree: i64, expected: usize, found: usize },
    #[error("not a cycle in degree {degree}")]
    NotACycle { degree: i64 },
    #[error("pairing in degree {degree} needs length {expected}, got cochain {cochain} and chain {chain}")]
    PairingLength {
        degree: i64,
        expected: usize,
        cochain: usize,
        chain: usize,
    },
    #[error("coefficients {0} are not supported for group computations")]
    UnsupportedCoefficients(Coefficients),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
