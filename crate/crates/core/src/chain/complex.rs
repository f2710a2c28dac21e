use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::ChainError;
use crate::algebra::{AbelianGroupPresentation, ClassCoordinates, IntegerMatrix, Lattice, Subquotient};

/// Direction of the differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// `∂ : C_n → C_{n-1}`
    Chain,
    /// `d : C^n → C^{n+1}`
    Cochain,
}

impl Grading {
    /// Degree the differential lands in.
    pub fn next(self, n: i64) -> i64 {
        match self {
            Grading::Chain => n - 1,
            Grading::Cochain => n + 1,
        }
    }

    /// Degree the differential into `n` starts from.
    pub fn prev(self, n: i64) -> i64 {
        match self {
            Grading::Chain => n + 1,
            Grading::Cochain => n - 1,
        }
    }

    pub fn dual(self) -> Grading {
        match self {
            Grading::Chain => Grading::Cochain,
            Grading::Cochain => Grading::Chain,
        }
    }
}

/// Coefficient ring tag. `Angle` (ℚ/ℤ) only makes sense for Čech cochain
/// values; group computations with it are refused.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Coefficients {
    #[default]
    Integer,
    Rational,
    Modular(u64),
    Angle,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integer => write!(f, "Z"),
            Coefficients::Rational => write!(f, "Q"),
            Coefficients::Modular(m) => write!(f, "Z/{m}"),
            Coefficients::Angle => write!(f, "Q/Z"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" | "ℤ" | "integer" => Ok(Coefficients::Integer),
            "Q" | "ℚ" | "rational" => Ok(Coefficients::Rational),
            "Q/Z" | "ℚ/ℤ" | "angle" => Ok(Coefficients::Angle),
            other => {
                let m = other
                    .strip_prefix("Z/")
                    .or_else(|| other.strip_prefix("ℤ/"))
                    .and_then(|m| m.parse::<u64>().ok())
                    .filter(|&m| m >= 2)
                    .ok_or_else(|| format!("unknown coefficient ring {other:?} (expected Z, Q, Z/m with m ≥ 2, or angle)"))?;
                Ok(Coefficients::Modular(m))
            }
        }
    }
}

impl TryFrom<String> for Coefficients {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<Coefficients> for String {
    fn from(c: Coefficients) -> String {
        c.to_string()
    }
}

/// A bounded complex of free abelian groups `ℤ^{dims}` living in degrees
/// `lo ..= lo + dims.len() - 1`. `links[i]` is the differential between
/// degrees `lo+i` and `lo+i+1`, pointing in the direction of the grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct ChainComplex {
    grading: Grading,
    lo: i64,
    dims: Vec<usize>,
    links: Vec<IntegerMatrix>,
    coefficients: Coefficients,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexRepr {
    grading: Grading,
    lowest_degree: i64,
    dims: Vec<usize>,
    differentials: Vec<IntegerMatrix>,
    #[serde(default)]
    coefficients: Coefficients,
}

impl TryFrom<ComplexRepr> for ChainComplex {
    type Error = ChainError;
    fn try_from(r: ComplexRepr) -> Result<Self, ChainError> {
        ChainComplex::new(r.grading, r.lowest_degree, r.dims, r.differentials)
            .map(|c| c.with_coefficients(r.coefficients))
    }
}

impl From<ChainComplex> for ComplexRepr {
    fn from(c: ChainComplex) -> Self {
        ComplexRepr {
            grading: c.grading,
            lowest_degree: c.lo,
            dims: c.dims,
            differentials: c.links,
            coefficients: c.coefficients,
        }
    }
}

impl ChainComplex {
    /// Validates shapes and `∂∘∂ = 0`.
    pub fn new(
        grading: Grading,
        lo: i64,
        dims: Vec<usize>,
        links: Vec<IntegerMatrix>,
    ) -> Result<Self, ChainError> {
        let expected = dims.len().saturating_sub(1);
        if links.len() != expected {
            return Err(ChainError::LinkCount {
                expected,
                found: links.len(),
            });
        }
        for (i, m) in links.iter().enumerate() {
            let want = match grading {
                Grading::Chain => (dims[i], dims[i + 1]),
                Grading::Cochain => (dims[i + 1], dims[i]),
            };
            if m.shape() != want {
                return Err(ChainError::Shape {
                    what: "differential",
                    degree: lo + i as i64,
                    expected: want,
                    found: m.shape(),
                });
            }
        }
        let c = ChainComplex {
            grading,
            lo,
            dims,
            links,
            coefficients: Coefficients::Integer,
        };
        c.check_square_zero()?;
        Ok(c)
    }

    /// Builds from the differential out of each degree.
    pub fn from_differentials(
        grading: Grading,
        lo: i64,
        dims: Vec<usize>,
        mut out_of: impl FnMut(i64) -> IntegerMatrix,
    ) -> Result<Self, ChainError> {
        let len = dims.len() as i64;
        let links = (0..len - 1)
            .map(|i| match grading {
                Grading::Chain => out_of(lo + i + 1),
                Grading::Cochain => out_of(lo + i),
            })
            .collect();
        ChainComplex::new(grading, lo, dims, links)
    }

    /// A single group `ℤ^dim` in degree `n`.
    pub fn concentrated(grading: Grading, n: i64, dim: usize) -> Self {
        ChainComplex {
            grading,
            lo: n,
            dims: vec![dim],
            links: Vec::new(),
            coefficients: Coefficients::Integer,
        }
    }

    pub fn with_coefficients(mut self, c: Coefficients) -> Self {
        self.coefficients = c;
        self
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree; `lo - 1` for an empty complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn in_range(&self, n: i64) -> bool {
        self.degrees().contains(&n)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Rank of the chain group in degree `n` (zero outside the range).
    pub fn dim(&self, n: i64) -> usize {
        if self.in_range(n) {
            self.dims[(n - self.lo) as usize]
        } else {
            0
        }
    }

    /// Differential leaving degree `n`, as a `dim(next) × dim(n)` matrix.
    pub fn out_of(&self, n: i64) -> IntegerMatrix {
        let next = self.grading.next(n);
        if !self.in_range(n) || !self.in_range(next) {
            return IntegerMatrix::zeros(self.dim(next), self.dim(n));
        }
        let i = (n.min(next) - self.lo) as usize;
        self.links[i].clone()
    }

    /// Differential arriving in degree `n`.
    pub fn into(&self, n: i64) -> IntegerMatrix {
        self.out_of(self.grading.prev(n))
    }

    fn check_square_zero(&self) -> Result<(), ChainError> {
        for n in self.degrees() {
            let next = self.grading.next(n);
            if !self.out_of(next).mul(&self.out_of(n)).is_zero() {
                return Err(ChainError::NotAComplex { degree: n });
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|n| if n.rem_euclid(2) == 0 { 1 } else { -1 } * self.dim(n) as i64)
            .sum()
    }

    /// Cycles in degree `n`.
    pub fn cycles(&self, n: i64) -> Lattice {
        Lattice::kernel(&self.out_of(n))
    }

    /// Boundaries in degree `n`.
    pub fn boundaries(&self, n: i64) -> Lattice {
        Lattice::span(&self.into(n))
    }

    /// Integral homology in degree `n` with class coordinates. Degrees outside
    /// the range give the zero group.
    pub fn homology_group(&self, n: i64) -> HomologyGroup {
        HomologyGroup {
            degree: n,
            quotient: Subquotient::new(self.cycles(n), self.boundaries(n)),
        }
    }

    /// Homology in degree `n` with the complex's coefficient ring.
    pub fn homology(&self, n: i64) -> Result<AbelianGroupPresentation, ChainError> {
        if !self.in_range(n) {
            return Err(ChainError::DegreeOutOfRange {
                degree: n,
                lo: self.lo,
                hi: self.hi(),
            });
        }
        self.homology_with(n, self.coefficients)
    }

    /// Homology in degree `n` with coefficients `c`, from the integral groups
    /// by universal coefficients.
    pub fn homology_with(&self, n: i64, c: Coefficients) -> Result<AbelianGroupPresentation, ChainError> {
        let h = self.homology_group(n).quotient.group().clone();
        match c {
            Coefficients::Integer => Ok(h),
            Coefficients::Rational => Ok(AbelianGroupPresentation::free(h.free_rank)),
            Coefficients::Modular(m) => {
                let m = BigInt::from(m);
                let below = self.homology_group(self.grading.next(n)).quotient.group().clone();
                Ok(h.tensor_mod(&m).direct_sum(&below.tor_mod(&m)))
            }
            Coefficients::Angle => Err(ChainError::UnsupportedCoefficients(c)),
        }
    }

    /// Every homology group over the complex's coefficients, lowest degree first.
    pub fn all_homology(&self) -> Result<Vec<(i64, AbelianGroupPresentation)>, ChainError> {
        self.degrees().map(|n| Ok((n, self.homology(n)?))).collect()
    }

    /// The same complex with the opposite grading and transposed differentials.
    pub fn dual(&self) -> ChainComplex {
        ChainComplex {
            grading: self.grading.dual(),
            lo: self.lo,
            dims: self.dims.clone(),
            links: self.links.iter().map(IntegerMatrix::transpose).collect(),
            coefficients: self.coefficients,
        }
    }

    /// `X ⊕ Y` degreewise.
    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex, ChainError> {
        if self.grading != other.grading {
            return Err(ChainError::GradingMismatch);
        }
        let (lo, hi) = hull(&[self.degrees(), other.degrees()]);
        let dims = (lo..=hi).map(|n| self.dim(n) + other.dim(n)).collect();
        ChainComplex::from_differentials(self.grading, lo, dims, |n| {
            let a = self.out_of(n);
            let b = other.out_of(n);
            let z1 = IntegerMatrix::zeros(a.rows(), b.cols());
            let z2 = IntegerMatrix::zeros(b.rows(), a.cols());
            IntegerMatrix::block(&a, &z1, &z2, &b)
        })
        .map(|c| c.with_coefficients(self.coefficients))
    }
}

/// Smallest interval containing every nonempty range; `(0, -1)` if all are empty.
pub(crate) fn hull(ranges: &[std::ops::RangeInclusive<i64>]) -> (i64, i64) {
    let live: Vec<_> = ranges.iter().filter(|r| !r.is_empty()).collect();
    if live.is_empty() {
        return (0, -1);
    }
    let lo = live.iter().map(|r| *r.start()).min().unwrap();
    let hi = live.iter().map(|r| *r.end()).max().unwrap();
    (lo, hi)
}

/// `H_n = Z_n / B_n` with its change of basis, so cycles can be expressed
/// in terms of generators.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub degree: i64,
    pub quotient: Subquotient,
}

impl HomologyGroup {
    pub fn group(&self) -> &AbelianGroupPresentation {
        self.quotient.group()
    }

    /// Class of a cycle; `None` if `z` is not a cycle.
    pub fn class_of(&self, z: &[BigInt]) -> Option<ClassCoordinates> {
        self.quotient.class_of(z)
    }

    pub fn is_boundary(&self, z: &[BigInt]) -> bool {
        self.quotient.bottom().contains(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_circle() -> ChainComplex {
        // edges 01, 12, 02
        let d1 = IntegerMatrix::from_rows(&[[-1, 0, -1], [1, -1, 0], [0, 1, 1]]);
        ChainComplex::new(Grading::Chain, 0, vec![3, 3], vec![d1]).unwrap()
    }

    fn rp2_cellular() -> ChainComplex {
        // one cell per dimension, ∂₂ = 2, ∂₁ = 0
        ChainComplex::new(
            Grading::Chain,
            0,
            vec![1, 1, 1],
            vec![IntegerMatrix::from_rows(&[[0]]), IntegerMatrix::from_rows(&[[2]])],
        )
        .unwrap()
    }

    #[test]
    fn circle_homology() {
        let c = triangle_circle();
        assert_eq!(c.homology(0).unwrap(), AbelianGroupPresentation::free(1));
        assert_eq!(c.homology(1).unwrap(), AbelianGroupPresentation::free(1));
        assert!(c.homology(2).is_err());
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn square_nonzero_is_rejected() {
        let d1 = IntegerMatrix::from_rows(&[[1]]);
        let d2 = IntegerMatrix::from_rows(&[[1]]);
        assert!(matches!(
            ChainComplex::new(Grading::Chain, 0, vec![1, 1, 1], vec![d1, d2]),
            Err(ChainError::NotAComplex { .. })
        ));
    }

    #[test]
    fn universal_coefficients() {
        let c = rp2_cellular();
        assert_eq!(c.homology(1).unwrap().to_string(), "ℤ/2");
        assert!(c.homology(2).unwrap().is_trivial());
        let m2 = c.clone().with_coefficients(Coefficients::Modular(2));
        assert_eq!(m2.homology(1).unwrap().to_string(), "ℤ/2");
        assert_eq!(m2.homology(2).unwrap().to_string(), "ℤ/2");
        let q = c.with_coefficients(Coefficients::Rational);
        assert!(q.homology(1).unwrap().is_trivial());
        assert_eq!(q.homology(0).unwrap().free_rank, 1);
    }

    #[test]
    fn cochain_uct_uses_the_degree_above() {
        let c = rp2_cellular().dual().with_coefficients(Coefficients::Modular(2));
        // H^1(RP^2; Z/2) = Z/2, H^2 = Z/2
        assert_eq!(c.homology(1).unwrap().to_string(), "ℤ/2");
        assert_eq!(c.homology(2).unwrap().to_string(), "ℤ/2");
        let z = rp2_cellular().dual();
        assert!(z.homology(1).unwrap().is_trivial());
        assert_eq!(z.homology(2).unwrap().to_string(), "ℤ/2");
    }

    #[test]
    fn json_round_trip() {
        let c = rp2_cellular();
        let s = serde_json::to_string(&c).unwrap();
        let back: ChainComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let bad = s.replace("[[2]]", "[[3]]").replace("\"entries\":[2]", "\"entries\":[1]");
        // still a complex (∂₁ = 0), but a different one
        let other: ChainComplex = serde_json::from_str(&bad).unwrap();
        assert_ne!(other, c);
    }

    #[test]
    fn coefficient_tags_parse() {
        assert_eq!("Z/5".parse::<Coefficients>().unwrap(), Coefficients::Modular(5));
        assert!("Z/1".parse::<Coefficients>().is_err());
        assert_eq!(Coefficients::Angle.to_string(), "Q/Z");
    }
}
