//! Delta complexes, simplicial maps, and their cones and cylinders.

pub mod builtins;
pub mod compare;
pub mod cone;
mod delta;
mod map;

pub use compare::{cone_comparison, delta_reduced_homology, reduced_homology, ConeComparison, DegreeComparison};
pub use cone::{mapping_cylinder, suspend_map, suspension, topological_mapping_cone, MappingCylinder, TopologicalCone};
pub use delta::{DeltaComplex, SimplexRef};
pub use map::SimplicialMap;

use crate::chain::ChainError;

#[derive(Debug, thiserror::Error)]
pub enum SimplicialError {
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("{dim}-cell {cell} lists {found} faces, expected {expected}")]
    FaceCount {
        dim: usize,
        cell: usize,
        expected: usize,
        found: usize,
    },
    #[error("{dim}-cell {cell} has a bad face: {why}")]
    BadFace { dim: usize, cell: usize, why: String },
    #[error("{dim}-cell {cell} violates d_{i} d_{j} = d_{{j-1}} d_{i}")]
    Identity { dim: usize, cell: usize, i: usize, j: usize },
    #[error("several cells have vertices {0:?}")]
    AmbiguousVertices(Vec<usize>),
    #[error("map lists {found} images of {dim}-cells, expected {expected}")]
    ImageCount { dim: usize, expected: usize, found: usize },
    #[error("image of {dim}-cell {cell} is invalid: {why}")]
    BadImage { dim: usize, cell: usize, why: String },
    #[error("map does not commute with face {face} of {dim}-cell {cell}")]
    NotSimplicial { dim: usize, cell: usize, face: usize },
    #[error("target has no cell with vertices {0:?}")]
    NoCell(Vec<usize>),
    #[error("{0}")]
    Schema(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("cone computations disagree in degree {degree}: algebraic {algebraic}, topological {topological}, cylinder {cylinder}")]
    Mismatch {
        degree: i64,
        algebraic: String,
        topological: String,
        cylinder: String,
    },
    #[error(transparent)]
    Chain(#[from] ChainError),
}
