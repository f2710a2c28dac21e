//! Root systems of the compact simple Lie groups, their fundamental alcoves
//! and weight lattices, and the SU(n) cover combinatorics.
//!
//! Everything lives in a fixed Euclidean model of `𝔱` whose inner product is
//! the basic one (long roots have `α·α = 2`), so `𝔱` and `𝔱*` are identified
//! through the stored Gram matrix.

mod alcove;
mod roots;
pub mod sun;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use alcove::{
    alcove_membership, conjugacy_prequant, cover_nerve, min_vertex_level, reduce_to_alcove, Alcove, ConjugacyVerdict,
    Reduction, WeightLattice,
};
pub use roots::{root_system, RootSystem};

use crate::algebra::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("no simple root system {family}{rank}")]
    InvalidRank { family: Family, rank: usize },
    #[error("unrecognized group `{0}`")]
    UnknownGroup(String),
    #[error("expected a vector of length {expected}, found {found}")]
    Length { expected: usize, found: usize },
    #[error("vector is not in the Cartan subalgebra")]
    NotInTorus,
    #[error("point is not in the fundamental alcove")]
    OutsideAlcove,
    #[error("level must be a positive integer, got {0}")]
    Level(i64),
    #[error("cover indices must satisfy 1 ≤ i < j ≤ {n}, got i = {i}, j = {j}")]
    Index { n: usize, i: usize, j: usize },
    #[error("eigenphases: {0}")]
    Phases(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Parses `A3`, `G2`, `SU(4)`, `Sp(6)` (rank 3) or `Spin(7)`.
pub fn parse_group(s: &str) -> Result<(Family, usize), LieError> {
    let bad = || LieError::UnknownGroup(s.to_string());
    let t = s.trim();
    if let Some(inner) = t.strip_suffix(')') {
        let (name, n) = inner.split_once('(').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        return match name.trim().to_ascii_lowercase().as_str() {
            "su" if n >= 2 => Ok((Family::A, n - 1)),
            "sp" if n >= 4 && n.is_multiple_of(2) => Ok((Family::C, n / 2)),
            "spin" if n >= 5 && n % 2 == 1 => Ok((Family::B, (n - 1) / 2)),
            "spin" if n >= 8 && n.is_multiple_of(2) => Ok((Family::D, n / 2)),
            _ => Err(bad()),
        };
    }
    let mut chars = t.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        Some('D') => Family::D,
        Some('E') => Family::E,
        Some('F') => Family::F,
        Some('G') => Family::G,
        _ => return Err(bad()),
    };
    let rank = chars.as_str().parse().map_err(|_| bad())?;
    Ok((family, rank))
}

impl FromStr for RootSystem {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, LieError> {
        let (family, rank) = parse_group(s)?;
        root_system(family, rank)
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(k: &BigRational, a: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|x| x * k).collect()
}
