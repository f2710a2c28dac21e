//! Duals of chain maps and the cone/cocone comparison.
//!
//! With the block conventions of [`super::cone`], the differential of
//! `Cone(f')` is `−J·∂ᵀ·J` where `∂` is the cone differential of `f` and
//! `J = diag(I, −I)`. So the two complexes agree up to the chain isomorphism
//! `(−1)ⁿJ`, and the pairing satisfies `⟨d c, z⟩ = −⟨c, ∂ z⟩`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cone::{mapping_cocone, mapping_cone, ConeComplex};
use super::{ChainError, ChainMap, Grading};
use crate::algebra::rational::rational_matvec;
use crate::algebra::IntegerMatrix;

/// `f' : Y' → X'` with transposed components, on the dual (cochain) complexes.
pub fn dualize(f: &ChainMap) -> Result<ChainMap, ChainError> {
    if f.grading() != Grading::Chain {
        return Err(ChainError::WrongGrading {
            expected: Grading::Chain,
        });
    }
    let comps = f.degrees().map(|n| (n, f.component(n).transpose())).collect();
    ChainMap::new(f.target().dual(), f.source().dual(), comps)
}

/// `diag(I, −I)` on cone degree `n`.
pub fn block_sign(cone: &ConeComplex, n: i64) -> IntegerMatrix {
    let (a, b) = cone.split(n);
    let mut d = vec![BigInt::from(1); a];
    d.extend(std::iter::repeat_n(BigInt::from(-1), b));
    IntegerMatrix::from_diagonal(a + b, a + b, &d)
}

/// Degreewise comparison of `Cone(f')` with `Cone(f)'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualConeReport {
    /// Same degrees and block sizes in every degree.
    pub shapes_match: bool,
    /// `d_{Cone(f')} = Cone(f)'` literally, degree by degree.
    pub equal_literally: bool,
    /// `d_{Cone(f')} = −J ∂ᵀ J` in every degree.
    pub equal_up_to_block_sign: bool,
}

pub fn compare_dual_cone(f: &ChainMap) -> Result<DualConeReport, ChainError> {
    let cone = mapping_cone(f)?;
    let cocone = mapping_cocone(&dualize(f)?)?;
    let shapes_match = cone.complex().degrees() == cocone.complex().degrees()
        && cone.complex().degrees().all(|n| cone.split(n) == cocone.split(n));
    if !shapes_match {
        return Ok(DualConeReport {
            shapes_match,
            equal_literally: false,
            equal_up_to_block_sign: false,
        });
    }
    let mut literal = true;
    let mut signed = true;
    for n in cone.complex().degrees() {
        let d = cocone.complex().out_of(n);
        let dual = cone.complex().out_of(n + 1).transpose();
        literal &= d == dual;
        let twisted = block_sign(&cone, n + 1).mul(&dual).mul(&block_sign(&cone, n)).neg();
        signed &= d == twisted;
    }
    Ok(DualConeReport {
        shapes_match,
        equal_literally: literal,
        equal_up_to_block_sign: signed,
    })
}

/// `d c` for a rational cochain `c` of `Cone(f')` in degree `n`.
pub fn cocone_differential(cocone: &ConeComplex, n: i64, c: &[BigRational]) -> Vec<BigRational> {
    rational_matvec(&cocone.complex().out_of(n), c)
}

/// Both sides of the pairing identity for `c ∈ Cone^n(f')`, `z ∈ Cone_{n+1}(f)`:
/// returns `(⟨d c, z⟩, ⟨c, ∂ z⟩)`.
pub fn adjunction_sides(
    cone: &ConeComplex,
    cocone: &ConeComplex,
    n: i64,
    c: &[BigRational],
    z: &[BigInt],
) -> Result<(BigRational, BigRational), ChainError> {
    let dc = cocone_differential(cocone, n, c);
    let dz = cone.complex().out_of(n + 1).mul_vec(z).map_err(ChainError::Algebra)?;
    Ok((cone.pair(n + 1, &dc, z)?, cone.pair(n, c, &dz)?))
}
