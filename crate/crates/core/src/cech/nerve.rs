use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::CechError;
use crate::algebra::IntegerMatrix;
use crate::chain::{ChainComplex, ChainMap, Grading};

/// Largest intersecting family accepted when expanding to all subfamilies.
const MAX_FAMILY: usize = 16;

/// Intersection pattern of a cover indexed by `0..index_count`: the families
/// with nonempty common intersection, closed under subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "NerveRepr", into = "NerveRepr")]
pub struct Nerve {
    index_count: usize,
    /// `simplices[p]`: sorted `(p+1)`-element families, in lexicographic order.
    simplices: Vec<Vec<Vec<usize>>>,
    lookup: Vec<BTreeMap<Vec<usize>, usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NerveRepr {
    index_count: usize,
    #[serde(default)]
    maximal: Vec<Vec<usize>>,
}

impl TryFrom<NerveRepr> for Nerve {
    type Error = CechError;
    fn try_from(r: NerveRepr) -> Result<Self, CechError> {
        Nerve::from_maximal(r.index_count, &r.maximal)
    }
}

impl From<Nerve> for NerveRepr {
    fn from(n: Nerve) -> Self {
        NerveRepr {
            maximal: n.maximal(),
            index_count: n.index_count,
        }
    }
}

impl Nerve {
    /// Downward closure of the given families; every singleton is included.
    pub fn from_maximal(index_count: usize, families: &[Vec<usize>]) -> Result<Self, CechError> {
        let mut all: BTreeSet<Vec<usize>> = (0..index_count).map(|i| vec![i]).collect();
        for fam in families {
            let set: BTreeSet<usize> = fam.iter().copied().collect();
            if let Some(&i) = set.iter().find(|&&i| i >= index_count) {
                return Err(CechError::UnknownIndex(i));
            }
            if set.len() > MAX_FAMILY {
                return Err(CechError::FamilyTooLarge(set.len()));
            }
            let members: Vec<usize> = set.into_iter().collect();
            for mask in 1u32..(1 << members.len()) {
                let sub = members
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &i)| i)
                    .collect();
                all.insert(sub);
            }
        }
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); top];
        for s in all {
            simplices[s.len() - 1].push(s);
        }
        for level in &mut simplices {
            level.sort();
        }
        let lookup = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(Nerve {
            index_count,
            simplices,
            lookup,
        })
    }

    /// Every family of `0..n` intersects.
    pub fn full_simplex(n: usize) -> Self {
        Nerve::from_maximal(n, &[(0..n).collect()]).expect("small simplex")
    }

    /// All proper subfamilies of `0..n`: the boundary of an `(n-1)`-simplex.
    pub fn simplex_boundary(n: usize) -> Self {
        let families: Vec<Vec<usize>> = (0..n).map(|skip| (0..n).filter(|&i| i != skip).collect()).collect();
        Nerve::from_maximal(n, &families).expect("small simplex")
    }

    /// `m ≥ 3` arcs around a circle, consecutive arcs overlapping.
    pub fn circle_arcs(m: usize) -> Result<Self, CechError> {
        if m < 3 {
            return Err(CechError::Schema(format!("a circle needs at least 3 arcs, got {m}")));
        }
        let families: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
        Nerve::from_maximal(m, &families)
    }

    pub fn index_count(&self) -> usize {
        self.index_count
    }

    /// Highest `p` with a `p`-simplex; `None` when there are no indices.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, p: usize) -> usize {
        self.simplices(p).len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, family: &[usize]) -> bool {
        let mut s = family.to_vec();
        s.sort_unstable();
        s.dedup();
        !s.is_empty() && self.index_of(&s).is_some()
    }

    /// Position of a sorted family among the simplices of its dimension.
    pub fn index_of(&self, sorted: &[usize]) -> Option<usize> {
        let p = sorted.len().checked_sub(1)?;
        self.lookup.get(p)?.get(sorted).copied()
    }

    /// Families not contained in a larger one.
    pub fn maximal(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (p, level) in self.simplices.iter().enumerate() {
            for s in level {
                let covered = self.simplices(p + 1).iter().any(|t| s.iter().all(|i| t.contains(i)));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// `(δf)_{i₀…i_{p+1}} = Σ (−1)^k f_{…î_k…}` as a matrix from `p`-cochains
    /// to `(p+1)`-cochains.
    pub fn coboundary(&self, p: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.count(p + 1), self.count(p));
        for (row, s) in self.simplices(p + 1).iter().enumerate() {
            for k in 0..s.len() {
                let mut face = s.clone();
                face.remove(k);
                let col = self.index_of(&face).expect("nerve is closed under subsets");
                m[(row, col)] = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }

    /// Čech cochain complex with integer entries, degrees `0..=dim`.
    pub fn cochain_complex(&self) -> ChainComplex {
        let dims: Vec<usize> = (0..self.simplices.len()).map(|p| self.count(p)).collect();
        ChainComplex::from_differentials(Grading::Cochain, 0, dims, |p| self.coboundary(p as usize))
            .expect("δ∘δ = 0 on a nerve")
    }
}

/// A refinement `r : I → J` between the nerve of a cover of `M` and the
/// nerve of a cover of `N`, carrying intersecting families to intersecting
/// families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoverMapRepr", into = "CoverMapRepr")]
pub struct CoverMap {
    source: Nerve,
    target: Nerve,
    refinement: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverMapRepr {
    source: Nerve,
    target: Nerve,
    refinement: Vec<usize>,
}

impl TryFrom<CoverMapRepr> for CoverMap {
    type Error = CechError;
    fn try_from(r: CoverMapRepr) -> Result<Self, CechError> {
        CoverMap::new(r.source, r.target, r.refinement)
    }
}

impl From<CoverMap> for CoverMapRepr {
    fn from(m: CoverMap) -> Self {
        CoverMapRepr {
            source: m.source,
            target: m.target,
            refinement: m.refinement,
        }
    }
}

impl CoverMap {
    pub fn new(source: Nerve, target: Nerve, refinement: Vec<usize>) -> Result<Self, CechError> {
        if refinement.len() != source.index_count() {
            return Err(CechError::Schema(format!(
                "refinement lists {} indices, source has {}",
                refinement.len(),
                source.index_count()
            )));
        }
        if let Some(&j) = refinement.iter().find(|&&j| j >= target.index_count()) {
            return Err(CechError::UnknownIndex(j));
        }
        for level in &source.simplices {
            for s in level {
                let image: Vec<usize> = s.iter().map(|&i| refinement[i]).collect();
                if !target.contains(&image) {
                    return Err(CechError::NotARefinement {
                        family: s.clone(),
                        image,
                    });
                }
            }
        }
        Ok(CoverMap {
            source,
            target,
            refinement,
        })
    }

    pub fn identity(n: &Nerve) -> Self {
        CoverMap::new(n.clone(), n.clone(), (0..n.index_count()).collect()).expect("identity refinement")
    }

    pub fn source(&self) -> &Nerve {
        &self.source
    }

    pub fn target(&self) -> &Nerve {
        &self.target
    }

    pub fn refinement(&self) -> &[usize] {
        &self.refinement
    }

    /// `(Φ*g)_{i₀…i_p} = g_{r(i₀)…r(i_p)}`, zero when an index repeats.
    pub fn pullback_matrix(&self, p: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.source.count(p), self.target.count(p));
        for (row, s) in self.source.simplices(p).iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|&i| self.refinement[i]).collect();
            if let Some((sorted, sign)) = sort_with_sign(&image) {
                let col = self.target.index_of(&sorted).expect("refinement checked");
                m[(row, col)] = BigInt::from(sign);
            }
        }
        m
    }

    /// `Φ* : C•(target) → C•(source)`.
    pub fn pullback(&self) -> ChainMap {
        let x = self.target.cochain_complex();
        let y = self.source.cochain_complex();
        let top = self.source.simplices.len().min(self.target.simplices.len());
        let comps = (0..top).map(|p| (p as i64, self.pullback_matrix(p))).collect();
        ChainMap::new(x, y, comps).expect("pullback commutes with δ")
    }
}

/// Sorts a tuple of distinct indices and reports the permutation sign;
/// `None` when an index repeats.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = tuple.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Minimal 6-index triangulation of `ℝP²`.
pub fn rp2_nerve() -> Nerve {
    Nerve::from_maximal(6, &rp2_triangles()).expect("fixed data")
}

fn rp2_triangles() -> Vec<Vec<usize>> {
    [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ]
    .iter()
    .map(|t| t.to_vec())
    .collect()
}

/// Suspension of [`rp2_nerve`] with cone points `6` and `7`; its integral
/// cohomology is `ℤ, 0, 0, ℤ/2` in degrees `0..=3`.
pub fn suspended_rp2_nerve() -> Nerve {
    let mut families = Vec::new();
    for t in rp2_triangles() {
        for apex in [6, 7] {
            let mut f = t.clone();
            f.push(apex);
            families.push(f);
        }
    }
    Nerve::from_maximal(8, &families).expect("fixed data")
}

pub fn named(name: &str) -> Result<Nerve, CechError> {
    match name {
        "point" => Ok(Nerve::full_simplex(1)),
        "circle" => Nerve::circle_arcs(3),
        "s3" => Ok(Nerve::simplex_boundary(5)),
        "rp2" => Ok(rp2_nerve()),
        "suspended-rp2" => Ok(suspended_rp2_nerve()),
        other => {
            if let Some(m) = other.strip_prefix("circle:").and_then(|m| m.parse().ok()) {
                return Nerve::circle_arcs(m);
            }
            if let Some(n) = other.strip_prefix("simplex:").and_then(|n| n.parse().ok()) {
                return Ok(Nerve::full_simplex(n));
            }
            if let Some(n) = other.strip_prefix("sphere:").and_then(|n: &str| n.parse::<usize>().ok()) {
                return Ok(Nerve::simplex_boundary(n + 2));
            }
            Err(CechError::UnknownBuiltin(other.to_string()))
        }
    }
}

/// Named refinements: `point-in-circle`, `rp2-to-point`, `s3-identity`,
/// `empty-into-s3`.
pub fn named_map(name: &str) -> Result<CoverMap, CechError> {
    match name {
        "point-in-circle" => CoverMap::new(Nerve::full_simplex(1), Nerve::circle_arcs(3)?, vec![1]),
        "rp2-to-point" => CoverMap::new(rp2_nerve(), Nerve::full_simplex(1), vec![0; 6]),
        "s3-identity" => Ok(CoverMap::identity(&Nerve::simplex_boundary(5))),
        "empty-into-s3" => CoverMap::new(Nerve::from_maximal(0, &[])?, Nerve::simplex_boundary(5), vec![]),
        other => Err(CechError::UnknownBuiltin(other.to_string())),
    }
}
