//! Algebraic mapping cones.
//!
//! Chain grading: `Cone_n(f) = X_{n-1} ⊕ Y_n`, `∂(θ,η) = (∂θ, f(θ) − ∂η)`.
//! Cochain grading, for `f : X → Y`: `Cone^n(f) = Y^{n-1} ⊕ X^n`,
//! `d(α,β) = (f(β) − dα, dβ)`.
//!
//! In both cases a cone element is stored as `first ⊕ second`, where `first`
//! sits in degree `n-1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::complex::hull;
use super::{ChainComplex, ChainError, ChainMap, Grading, HomotopyOperator};
use crate::algebra::rational::rational_int_dot;
use crate::algebra::{AbelianGroupPresentation, ClassCoordinates, IntegerMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeComplex {
    complex: ChainComplex,
    map: ChainMap,
}

impl ConeComplex {
    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn map(&self) -> &ChainMap {
        &self.map
    }

    /// Complex supplying the `first` summand (degree `n-1`).
    pub fn first_factor(&self) -> &ChainComplex {
        match self.complex.grading() {
            Grading::Chain => self.map.source(),
            Grading::Cochain => self.map.target(),
        }
    }

    /// Complex supplying the `second` summand (degree `n`).
    pub fn second_factor(&self) -> &ChainComplex {
        match self.complex.grading() {
            Grading::Chain => self.map.target(),
            Grading::Cochain => self.map.source(),
        }
    }

    /// `(dim first, dim second)` in cone degree `n`.
    pub fn split(&self, n: i64) -> (usize, usize) {
        (self.first_factor().dim(n - 1), self.second_factor().dim(n))
    }

    pub fn join<T: Clone>(&self, n: i64, first: &[T], second: &[T]) -> Vec<T> {
        let (a, b) = self.split(n);
        assert_eq!((first.len(), second.len()), (a, b), "cone block sizes");
        first.iter().chain(second).cloned().collect()
    }

    pub fn parts<'a, T>(&self, n: i64, v: &'a [T]) -> (&'a [T], &'a [T]) {
        let (a, b) = self.split(n);
        assert_eq!(v.len(), a + b, "cone vector length");
        v.split_at(a)
    }

    /// Matrix of `first ↦ (first, 0)` into degree `n`.
    pub fn first_inclusion(&self, n: i64) -> IntegerMatrix {
        let (a, b) = self.split(n);
        IntegerMatrix::identity(a).vstack(&IntegerMatrix::zeros(b, a))
    }

    /// Matrix of `second ↦ (0, second)` into degree `n`.
    pub fn second_inclusion(&self, n: i64) -> IntegerMatrix {
        let (a, b) = self.split(n);
        IntegerMatrix::zeros(a, b).vstack(&IntegerMatrix::identity(b))
    }

    pub fn first_projection(&self, n: i64) -> IntegerMatrix {
        let (a, b) = self.split(n);
        IntegerMatrix::identity(a).hstack(&IntegerMatrix::zeros(a, b))
    }

    pub fn second_projection(&self, n: i64) -> IntegerMatrix {
        let (a, b) = self.split(n);
        IntegerMatrix::zeros(b, a).hstack(&IntegerMatrix::identity(b))
    }

    pub fn homology(&self, n: i64) -> Result<AbelianGroupPresentation, ChainError> {
        self.complex.homology(n)
    }

    /// `⟨(α,β),(θ,η)⟩ = ⟨α,θ⟩ − ⟨β,η⟩` between a rational cochain of the dual
    /// cocone and an integral chain of this (chain-graded) cone, both in
    /// degree `n`. Slots are matched by degree: `α, θ` in degree `n-1`.
    pub fn pair(&self, n: i64, cochain: &[BigRational], chain: &[BigInt]) -> Result<BigRational, ChainError> {
        let total = self.complex.dim(n);
        if cochain.len() != total || chain.len() != total {
            return Err(ChainError::PairingLength {
                degree: n,
                expected: total,
                cochain: cochain.len(),
                chain: chain.len(),
            });
        }
        let (alpha, beta) = self.parts(n, cochain);
        let (theta, eta) = self.parts(n, chain);
        Ok(rational_int_dot(alpha, theta) - rational_int_dot(beta, eta))
    }
}

/// Cone of a chain map.
pub fn mapping_cone(f: &ChainMap) -> Result<ConeComplex, ChainError> {
    if f.grading() != Grading::Chain {
        return Err(ChainError::WrongGrading {
            expected: Grading::Chain,
        });
    }
    let (x, y) = (f.source(), f.target());
    let shifted = (x.lo() + 1)..=(x.hi() + 1);
    let (lo, hi) = hull(&[shifted, y.degrees()]);
    let dims = (lo..=hi).map(|n| x.dim(n - 1) + y.dim(n)).collect();
    let complex = ChainComplex::from_differentials(Grading::Chain, lo, dims, |n| {
        // Cone_n → Cone_{n-1}:  [[∂X_{n-1}, 0], [f_{n-1}, −∂Y_n]]
        let dx = x.out_of(n - 1);
        let dy = y.out_of(n);
        let zero = IntegerMatrix::zeros(dx.rows(), dy.cols());
        IntegerMatrix::block(&dx, &zero, &f.component(n - 1), &dy.neg())
    })?
    .with_coefficients(x.coefficients());
    Ok(ConeComplex {
        complex,
        map: f.clone(),
    })
}

/// Cone of a cochain map `f : X → Y`.
pub fn mapping_cocone(f: &ChainMap) -> Result<ConeComplex, ChainError> {
    if f.grading() != Grading::Cochain {
        return Err(ChainError::WrongGrading {
            expected: Grading::Cochain,
        });
    }
    let (x, y) = (f.source(), f.target());
    let shifted = (y.lo() + 1)..=(y.hi() + 1);
    let (lo, hi) = hull(&[shifted, x.degrees()]);
    let dims = (lo..=hi).map(|n| y.dim(n - 1) + x.dim(n)).collect();
    let complex = ChainComplex::from_differentials(Grading::Cochain, lo, dims, |n| {
        // Cone^n → Cone^{n+1}:  [[−dY^{n-1}, f^n], [0, dX^n]]
        let dy = y.out_of(n - 1);
        let dx = x.out_of(n);
        let zero = IntegerMatrix::zeros(dx.rows(), dy.cols());
        IntegerMatrix::block(&dy.neg(), &f.component(n), &zero, &dx)
    })?
    .with_coefficients(x.coefficients());
    Ok(ConeComplex {
        complex,
        map: f.clone(),
    })
}

/// `H_n(f)`, computed on the cone matching the grading of `f`.
pub fn relative_homology(f: &ChainMap, n: i64) -> Result<AbelianGroupPresentation, ChainError> {
    let cone = match f.grading() {
        Grading::Chain => mapping_cone(f)?,
        Grading::Cochain => mapping_cocone(f)?,
    };
    if !cone.complex.in_range(n) {
        return Err(ChainError::DegreeOutOfRange {
            degree: n,
            lo: cone.complex.lo(),
            hi: cone.complex.hi(),
        });
    }
    cone.homology(n)
}

/// `f` is a quasi-isomorphism, decided by vanishing of the cone homology.
pub fn is_quasi_iso(f: &ChainMap) -> Result<bool, ChainError> {
    let cone = match f.grading() {
        Grading::Chain => mapping_cone(f)?,
        Grading::Cochain => mapping_cocone(f)?,
    };
    Ok(cone
        .complex
        .degrees()
        .all(|n| cone.complex.homology_group(n).group().is_trivial()))
}

/// Image of `[γ]` under the connecting map of `0 → Y → Cone(f) → X[−1] → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectingImage {
    /// `f(γ)`, a cycle of `Y` in degree `n-1`.
    pub image: Vec<BigInt>,
    /// Its class in `H_{n-1}(Y)`.
    pub class: ClassCoordinates,
}

/// Returns `f(γ)` for a cycle `γ ∈ X_{n-1}`, after checking that the snake
/// construction (lift to `(γ,0)`, apply the cone differential, read off the
/// `Y` block) produces the same chain.
pub fn connecting_map_check(f: &ChainMap, n: i64, gamma: &[BigInt]) -> Result<ConnectingImage, ChainError> {
    let cone = mapping_cone(f)?;
    let x = f.source();
    if gamma.len() != x.dim(n - 1) {
        return Err(ChainError::VectorLength {
            degree: n - 1,
            expected: x.dim(n - 1),
            found: gamma.len(),
        });
    }
    if !x.cycles(n - 1).contains(gamma) {
        return Err(ChainError::NotACycle { degree: n - 1 });
    }
    let direct = f.apply(n - 1, gamma);
    let lift = cone.first_inclusion(n).mul_vec(gamma).expect("block size");
    let pushed = cone.complex.out_of(n).mul_vec(&lift).expect("cone differential");
    let (above, below) = cone.parts(n - 1, &pushed);
    if above.iter().any(|v| *v != BigInt::from(0)) || below != direct.as_slice() {
        return Err(ChainError::Inconsistent("connecting map differs from f(γ)"));
    }
    let class = f
        .target()
        .homology_group(n - 1)
        .class_of(&direct)
        .ok_or(ChainError::Inconsistent("f(γ) is not a cycle"))?;
    Ok(ConnectingImage { image: direct, class })
}

/// `F(α,β) = (α, −h(α) + β) : Cone(f) → Cone(g)` for a homotopy
/// `h∂ + ∂h = f − g`, with its inverse `(α, h(α) + β)`. Both are checked to be
/// chain maps and mutually inverse.
pub fn homotopy_cone_iso(
    f: &ChainMap,
    g: &ChainMap,
    h: &HomotopyOperator,
) -> Result<(ChainMap, ChainMap), ChainError> {
    h.check(f, g)?;
    let cf = mapping_cone(f)?;
    let cg = mapping_cone(g)?;
    let (x, y) = (f.source(), f.target());
    let build = |sign: i64, from: &ConeComplex, to: &ConeComplex| {
        let comps: BTreeMap<i64, IntegerMatrix> = from
            .complex
            .degrees()
            .map(|n| {
                let (a, b) = from.split(n);
                let hn = h.component(n - 1, x, y).scale(&BigInt::from(sign));
                let m = IntegerMatrix::block(
                    &IntegerMatrix::identity(a),
                    &IntegerMatrix::zeros(a, b),
                    &hn,
                    &IntegerMatrix::identity(b),
                );
                (n, m)
            })
            .collect();
        ChainMap::new(from.complex.clone(), to.complex.clone(), comps)
    };
    let forward = build(-1, &cf, &cg)?;
    let backward = build(1, &cg, &cf)?;
    let round = backward.compose(&forward)?;
    if round != ChainMap::identity(cf.complex()) {
        return Err(ChainError::Inconsistent("F⁻¹∘F is not the identity"));
    }
    let round = forward.compose(&backward)?;
    if round != ChainMap::identity(cg.complex()) {
        return Err(ChainError::Inconsistent("F∘F⁻¹ is not the identity"));
    }
    Ok((forward, backward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntegerMatrix as M;

    fn circle() -> ChainComplex {
        ChainComplex::new(Grading::Chain, 0, vec![1, 1], vec![M::from_rows(&[[0]])]).unwrap()
    }

    fn times_two() -> ChainMap {
        let c = circle();
        let comps = [(0, M::from_rows(&[[1]])), (1, M::from_rows(&[[2]]))];
        ChainMap::new(c.clone(), c, comps.into_iter().collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn times_two_cone() {
        let f = times_two();
        let cone = mapping_cone(&f).unwrap();
        assert_eq!(cone.complex().degrees(), 0..=2);
        assert!(cone.homology(0).unwrap().is_trivial());
        assert_eq!(cone.homology(1).unwrap().to_string(), "ℤ/2");
        assert!(cone.homology(2).unwrap().is_trivial());
        assert!(!is_quasi_iso(&f).unwrap());
        assert!(relative_homology(&f, 3).is_err());
    }

    #[test]
    fn identity_cone_is_acyclic() {
        assert!(is_quasi_iso(&ChainMap::identity(&circle())).unwrap());
    }

    #[test]
    fn zero_map_splits() {
        let c = circle();
        let f = ChainMap::zero(&c, &c).unwrap();
        // H_n = H_{n-1}(X) ⊕ H_n(Y)
        for n in 0..=2 {
            let want = c.homology_group(n - 1).group().direct_sum(c.homology_group(n).group());
            assert_eq!(relative_homology(&f, n).unwrap(), want);
        }
    }

    #[test]
    fn connecting_map_of_times_two() {
        let f = times_two();
        let img = connecting_map_check(&f, 2, &ints(&[1])).unwrap();
        assert_eq!(img.image, ints(&[2]));
        assert_eq!(img.class.free, ints(&[2]));
        let zero = connecting_map_check(&f, 2, &ints(&[0])).unwrap();
        assert!(zero.class.is_zero());
    }

    #[test]
    fn dual_times_two_cocone() {
        let f = times_two();
        let d = ChainMap::new(
            f.target().dual(),
            f.source().dual(),
            f.degrees().map(|n| (n, f.component(n).transpose())).collect(),
        )
        .unwrap();
        let cone = mapping_cocone(&d).unwrap();
        assert_eq!(cone.homology(2).unwrap().to_string(), "ℤ/2");
        assert!(cone.homology(1).unwrap().is_trivial());
    }

    #[test]
    fn homotopy_iso_identity_case() {
        let f = times_two();
        let (fw, bw) = homotopy_cone_iso(&f, &f, &HomotopyOperator::zero()).unwrap();
        assert_eq!(fw, ChainMap::identity(mapping_cone(&f).unwrap().complex()));
        assert_eq!(bw, fw);
    }
}
