//! Exact linear algebra over ℤ and ℚ.

mod group;
mod lattice;
pub(crate) mod matrix;
pub mod rational;
mod smith;
mod solve;

use thiserror::Error;

pub use group::{cokernel_presentation, AbelianGroupPresentation};
pub use lattice::{ClassCoordinates, Lattice, Subquotient};
pub use matrix::IntegerMatrix;
pub use smith::{smith_normal_form, smith_normal_form_bounded, SmithDecomposition};
pub use solve::{integer_solve, rational_matrix_solve, rational_rank, rational_solve, to_rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("expected {rows}×{cols} = {} entries, found {found}", rows * cols)]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
    #[error("Smith decomposition failed self-check: {0}")]
    SmithCheck(&'static str),
    #[error("entry size {bits} bits exceeds the limit of {limit} bits")]
    ResourceLimit { bits: u64, limit: u64 },
}
