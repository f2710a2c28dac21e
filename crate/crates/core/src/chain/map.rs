use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::complex::hull;
use super::{ChainComplex, ChainError, Grading};
use crate::algebra::IntegerMatrix;

/// A degree-preserving map of complexes. Components not listed are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: BTreeMap<i64, IntegerMatrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapRepr {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<Component>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Component {
    degree: i64,
    matrix: IntegerMatrix,
}

impl TryFrom<MapRepr> for ChainMap {
    type Error = ChainError;
    fn try_from(r: MapRepr) -> Result<Self, ChainError> {
        let comps = r.components.into_iter().map(|c| (c.degree, c.matrix)).collect();
        ChainMap::new(r.source, r.target, comps)
    }
}

impl From<ChainMap> for MapRepr {
    fn from(m: ChainMap) -> Self {
        MapRepr {
            source: m.source,
            target: m.target,
            components: m
                .components
                .into_iter()
                .map(|(degree, matrix)| Component { degree, matrix })
                .collect(),
        }
    }
}

impl ChainMap {
    /// Checks shapes and the commuting squares `∂f = f∂`.
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: BTreeMap<i64, IntegerMatrix>,
    ) -> Result<Self, ChainError> {
        if source.grading() != target.grading() {
            return Err(ChainError::GradingMismatch);
        }
        for (&n, m) in &components {
            let want = (target.dim(n), source.dim(n));
            if m.shape() != want {
                return Err(ChainError::Shape {
                    what: "map component",
                    degree: n,
                    expected: want,
                    found: m.shape(),
                });
            }
        }
        let components = components.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        let f = ChainMap {
            source,
            target,
            components,
        };
        f.check_commutes()?;
        Ok(f)
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let comps = c.degrees().map(|n| (n, IntegerMatrix::identity(c.dim(n)))).collect();
        ChainMap::new(c.clone(), c.clone(), comps).expect("identity commutes")
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Result<Self, ChainError> {
        ChainMap::new(source.clone(), target.clone(), BTreeMap::new())
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn grading(&self) -> Grading {
        self.source.grading()
    }

    /// Degrees where either side is nonzero.
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        let (lo, hi) = hull(&[self.source.degrees(), self.target.degrees()]);
        lo..=hi
    }

    pub fn component(&self, n: i64) -> IntegerMatrix {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zeros(self.target.dim(n), self.source.dim(n)))
    }

    pub fn apply(&self, n: i64, v: &[BigInt]) -> Vec<BigInt> {
        self.component(n).mul_vec(v).expect("vector has the source dimension")
    }

    fn check_commutes(&self) -> Result<(), ChainError> {
        let g = self.grading();
        for n in self.degrees() {
            let lhs = self.target.out_of(n).mul(&self.component(n));
            let rhs = self.component(g.next(n)).mul(&self.source.out_of(n));
            if lhs != rhs {
                return Err(ChainError::NotAChainMap { degree: n });
            }
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap, ChainError> {
        if other.target != self.source {
            return Err(ChainError::NotComposable);
        }
        let comps = other
            .degrees()
            .map(|n| (n, self.component(n).mul(&other.component(n))))
            .collect();
        ChainMap::new(other.source.clone(), self.target.clone(), comps)
    }

    fn same_ends(&self, other: &ChainMap) -> Result<(), ChainError> {
        if self.source != other.source || self.target != other.target {
            return Err(ChainError::NotComposable);
        }
        Ok(())
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap, ChainError> {
        self.same_ends(other)?;
        let comps = self
            .degrees()
            .map(|n| (n, self.component(n).sub(&other.component(n))))
            .collect();
        ChainMap::new(self.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap, ChainError> {
        self.same_ends(other)?;
        let comps = self
            .degrees()
            .map(|n| (n, self.component(n).add(&other.component(n))))
            .collect();
        ChainMap::new(self.source.clone(), self.target.clone(), comps)
    }

    /// `f_*` is a bijection on every homology group, decided by lattice
    /// arithmetic on cycles and boundaries rather than through the cone.
    pub fn induces_isomorphism(&self) -> bool {
        self.degrees().all(|n| {
            let zx = self.source.cycles(n);
            let bx = self.source.boundaries(n);
            let zy = self.target.cycles(n);
            let by = self.target.boundaries(n);
            let f = self.component(n);
            let onto = zx.image(&f).sum(&by).contains_lattice(&zy);
            let into_boundaries = zx.preimage_within(&f, &by);
            onto && bx.contains_lattice(&into_boundaries)
        })
    }
}

/// Maps `h_n : X_n → Y_{n+1}` (chain grading) or `X^n → Y^{n-1}` (cochain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyOperator {
    components: BTreeMap<i64, IntegerMatrix>,
}

impl HomotopyOperator {
    pub fn new(components: BTreeMap<i64, IntegerMatrix>) -> Self {
        HomotopyOperator { components }
    }

    pub fn zero() -> Self {
        HomotopyOperator {
            components: BTreeMap::new(),
        }
    }

    /// `h_n`, zero-padded to `dim Y_{n±1} × dim X_n`.
    pub fn component(&self, n: i64, x: &ChainComplex, y: &ChainComplex) -> IntegerMatrix {
        let up = x.grading().prev(n);
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zeros(y.dim(up), x.dim(n)))
    }

    /// `(h∂ + ∂h)_n`.
    pub fn boundary_term(&self, n: i64, x: &ChainComplex, y: &ChainComplex) -> IntegerMatrix {
        let g = x.grading();
        let h_down = self.component(g.next(n), x, y).mul(&x.out_of(n));
        let d_up = y.out_of(g.prev(n)).mul(&self.component(n, x, y));
        h_down.add(&d_up)
    }

    /// Checks `h∂ + ∂h = f − g` in every degree.
    pub fn check(&self, f: &ChainMap, g: &ChainMap) -> Result<(), ChainError> {
        f.same_ends(g)?;
        let (x, y) = (f.source(), f.target());
        for (&n, m) in &self.components {
            let want = (y.dim(x.grading().prev(n)), x.dim(n));
            if m.shape() != want {
                return Err(ChainError::Shape {
                    what: "homotopy component",
                    degree: n,
                    expected: want,
                    found: m.shape(),
                });
            }
        }
        for n in f.degrees() {
            let diff = f.component(n).sub(&g.component(n));
            if self.boundary_term(n, x, y) != diff {
                return Err(ChainError::NotAHomotopy { degree: n });
            }
        }
        Ok(())
    }

    /// `f − (h∂ + ∂h)`, the map `h` makes homotopic to `f`.
    pub fn deform(&self, f: &ChainMap) -> Result<ChainMap, ChainError> {
        let (x, y) = (f.source(), f.target());
        let comps = f
            .degrees()
            .map(|n| (n, f.component(n).sub(&self.boundary_term(n, x, y))))
            .collect();
        ChainMap::new(x.clone(), y.clone(), comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> ChainComplex {
        ChainComplex::new(Grading::Chain, 0, vec![1, 1], vec![IntegerMatrix::from_rows(&[[0]])]).unwrap()
    }

    fn times_two() -> ChainMap {
        let c = circle();
        let comps = [(0, IntegerMatrix::from_rows(&[[1]])), (1, IntegerMatrix::from_rows(&[[2]]))];
        ChainMap::new(c.clone(), c, comps.into_iter().collect()).unwrap()
    }

    #[test]
    fn commuting_squares_are_enforced() {
        let x = ChainComplex::new(Grading::Chain, 0, vec![1, 1], vec![IntegerMatrix::from_rows(&[[1]])]).unwrap();
        let comps = [(1, IntegerMatrix::from_rows(&[[1]]))].into_iter().collect();
        assert!(matches!(
            ChainMap::new(x.clone(), x, comps),
            Err(ChainError::NotAChainMap { degree: 1 })
        ));
    }

    #[test]
    fn times_two_is_not_an_isomorphism() {
        assert!(!times_two().induces_isomorphism());
        assert!(ChainMap::identity(&circle()).induces_isomorphism());
    }

    #[test]
    fn homotopy_check() {
        let interval = ChainComplex::new(
            Grading::Chain,
            0,
            vec![2, 1],
            vec![IntegerMatrix::from_rows(&[[-1], [1]])],
        )
        .unwrap();
        let f = ChainMap::identity(&interval);
        let h = HomotopyOperator::new([(0, IntegerMatrix::from_rows(&[[1, 0]]))].into_iter().collect());
        let g = h.deform(&f).unwrap();
        h.check(&f, &g).unwrap();
        assert!(h.check(&f, &f).is_err());
        assert!(g.induces_isomorphism());
    }

    #[test]
    fn json_round_trip() {
        let f = times_two();
        let s = serde_json::to_string(&f).unwrap();
        let back: ChainMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
