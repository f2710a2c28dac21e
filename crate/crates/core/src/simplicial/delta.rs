//! Normalized delta complexes.
//!
//! Every face of a cell is a [`SimplexRef`]: a nondegenerate cell of some
//! dimension together with a monotone surjection from the face's vertex set
//! onto the cell's. The identity surjection means the face is the cell
//! itself; anything else is a degenerate simplex, which contributes nothing to
//! the chain complex. Quotients such as collapsing a subcomplex to a point
//! stay expressible without subdividing.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::SimplicialError;
use crate::algebra::IntegerMatrix;
use crate::chain::{ChainComplex, Grading};

/// `map*(cell)`: the cell `base` of dimension `base_dim`, precomposed with the
/// monotone surjection `map : [n] → [base_dim]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub base_dim: usize,
    pub base: usize,
    pub map: Vec<usize>,
}

impl SimplexRef {
    /// The nondegenerate cell itself.
    pub fn cell(dim: usize, index: usize) -> Self {
        SimplexRef {
            base_dim: dim,
            base: index,
            map: (0..=dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.map.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.base_dim != self.dim()
    }

    /// Precompose with another monotone surjection `s : [m] → [dim]`.
    pub fn degenerate_along(&self, s: &[usize]) -> SimplexRef {
        SimplexRef {
            base_dim: self.base_dim,
            base: self.base,
            map: s.iter().map(|&i| self.map[i]).collect(),
        }
    }

    fn is_valid_surjection(&self) -> bool {
        !self.map.is_empty()
            && self.map[0] == 0
            && *self.map.last().unwrap() == self.base_dim
            && self.map.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
    }
}

impl fmt::Display for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}:{}∘{:?}", self.base_dim, self.base, self.map)
        } else {
            write!(f, "{}:{}", self.base_dim, self.base)
        }
    }
}

/// On the wire a reference is either a bare index (nondegenerate cell of
/// the implied dimension) or `{base_dim, base, map}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum RefRepr {
    Index(usize),
    Full { base_dim: usize, base: usize, map: Vec<usize> },
}

impl RefRepr {
    pub(crate) fn resolve(self, dim: usize) -> SimplexRef {
        match self {
            RefRepr::Index(i) => SimplexRef::cell(dim, i),
            RefRepr::Full { base_dim, base, map } => SimplexRef { base_dim, base, map },
        }
    }

    pub(crate) fn from_ref(r: &SimplexRef) -> Self {
        if r.is_degenerate() {
            RefRepr::Full {
                base_dim: r.base_dim,
                base: r.base,
                map: r.map.clone(),
            }
        } else {
            RefRepr::Index(r.base)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DeltaRepr", into = "DeltaRepr")]
pub struct DeltaComplex {
    /// `faces[n][i]`: the `n+1` faces of the `i`-th `n`-cell; empty for vertices.
    faces: Vec<Vec<Vec<SimplexRef>>>,
    /// Vertex tuple of every cell.
    vertices: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DeltaRepr {
    vertex_count: usize,
    /// `faces[k]` lists the `(k+1)`-cells, each by its ordered faces.
    #[serde(default)]
    faces: Vec<Vec<Vec<RefRepr>>>,
}

impl TryFrom<DeltaRepr> for DeltaComplex {
    type Error = SimplicialError;
    fn try_from(r: DeltaRepr) -> Result<Self, SimplicialError> {
        let mut faces = vec![vec![Vec::new(); r.vertex_count]];
        for (k, level) in r.faces.into_iter().enumerate() {
            faces.push(
                level
                    .into_iter()
                    .map(|cell| cell.into_iter().map(|f| f.resolve(k)).collect())
                    .collect(),
            );
        }
        DeltaComplex::new(faces)
    }
}

impl From<DeltaComplex> for DeltaRepr {
    fn from(c: DeltaComplex) -> Self {
        DeltaRepr {
            vertex_count: c.count(0),
            faces: c.faces[1..]
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|cell| cell.iter().map(RefRepr::from_ref).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl DeltaComplex {
    /// `faces[n][i]` lists the faces of the `i`-th `n`-cell; `faces[0]` must
    /// contain one empty list per vertex. Trailing empty dimensions are dropped.
    pub fn new(mut faces: Vec<Vec<Vec<SimplexRef>>>) -> Result<Self, SimplicialError> {
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        if faces.is_empty() {
            faces.push(Vec::new());
        }
        let mut k = DeltaComplex {
            faces,
            vertices: Vec::new(),
        };
        k.validate_refs()?;
        k.validate_identities()?;
        k.vertices = k.compute_vertices();
        Ok(k)
    }

    pub fn empty() -> Self {
        DeltaComplex {
            faces: vec![Vec::new()],
            vertices: vec![Vec::new()],
        }
    }

    /// Ordered simplicial complex on vertices `0..vertex_count` generated by
    /// `facets`. Every simplex lists its vertices sorted by `(key(v), v)`;
    /// cells of each dimension are indexed in lexicographic order of those
    /// tuples, faces `i` by deleting the `i`-th vertex.
    pub fn from_simplices<K: Ord>(
        vertex_count: usize,
        facets: &[Vec<usize>],
        key: impl Fn(usize) -> K,
    ) -> Result<Self, SimplicialError> {
        let sort = |s: &mut Vec<usize>| s.sort_by_key(|&a| (key(a), a));
        let mut levels: Vec<BTreeMap<Vec<usize>, usize>> = Vec::new();
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for facet in facets {
            let mut f = facet.clone();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(SimplicialError::UnknownVertex(v));
            }
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let mut s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                sort(&mut s);
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Vec::new());
                }
                by_dim[d].push(s);
            }
        }
        if by_dim.is_empty() {
            by_dim.push(Vec::new());
        }
        by_dim[0] = (0..vertex_count).map(|v| vec![v]).collect();
        for (d, level) in by_dim.iter_mut().enumerate() {
            if d > 0 {
                level.sort_by(|a, b| {
                    let ka: Vec<_> = a.iter().map(|&v| (key(v), v)).collect();
                    let kb: Vec<_> = b.iter().map(|&v| (key(v), v)).collect();
                    ka.cmp(&kb)
                });
                level.dedup();
            }
            levels.push(level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect());
        }
        let faces = by_dim
            .iter()
            .enumerate()
            .map(|(d, level)| {
                level
                    .iter()
                    .map(|s| {
                        if d == 0 {
                            return Vec::new();
                        }
                        (0..=d)
                            .map(|i| {
                                let mut t = s.clone();
                                t.remove(i);
                                SimplexRef::cell(d - 1, levels[d - 1][&t])
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        DeltaComplex::new(faces)
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }

    /// Number of nondegenerate `n`-cells.
    pub fn count(&self, n: usize) -> usize {
        self.faces.get(n).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.dim()).map(|n| self.count(n)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.count(0) == 0
    }

    pub fn faces_of(&self, n: usize, i: usize) -> &[SimplexRef] {
        &self.faces[n][i]
    }

    pub fn vertex_tuple(&self, n: usize, i: usize) -> &[usize] {
        &self.vertices[n][i]
    }

    pub fn ref_vertices(&self, r: &SimplexRef) -> Vec<usize> {
        let base = &self.vertices[r.base_dim][r.base];
        r.map.iter().map(|&p| base[p]).collect()
    }

    /// `d_i` of an arbitrary (possibly degenerate) simplex.
    pub fn face(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        let n = r.dim();
        assert!(n >= 1 && i <= n, "face index out of range");
        let mut m = r.map.clone();
        m.remove(i);
        let missing = (0..=r.base_dim).find(|v| m.binary_search(v).is_err());
        match missing {
            None => SimplexRef {
                base_dim: r.base_dim,
                base: r.base,
                map: m,
            },
            Some(j) => {
                let f = &self.faces[r.base_dim][r.base][j];
                let reindexed: Vec<usize> = m.iter().map(|&v| if v > j { v - 1 } else { v }).collect();
                f.degenerate_along(&reindexed)
            }
        }
    }

    fn validate_refs(&self) -> Result<(), SimplicialError> {
        for (n, level) in self.faces.iter().enumerate() {
            for (i, cell) in level.iter().enumerate() {
                let expected = if n == 0 { 0 } else { n + 1 };
                if cell.len() != expected {
                    return Err(SimplicialError::FaceCount {
                        dim: n,
                        cell: i,
                        expected,
                        found: cell.len(),
                    });
                }
                for r in cell {
                    self.check_ref(r, n - 1)
                        .map_err(|why| SimplicialError::BadFace { dim: n, cell: i, why })?;
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_ref(&self, r: &SimplexRef, dim: usize) -> Result<(), String> {
        if r.dim() != dim {
            return Err(format!("reference {r} has dimension {}, expected {dim}", r.dim()));
        }
        if r.base >= self.count(r.base_dim) {
            return Err(format!("reference {r} points past the last {}-cell", r.base_dim));
        }
        if !r.is_valid_surjection() {
            return Err(format!("reference {r} is not a monotone surjection"));
        }
        Ok(())
    }

    fn validate_identities(&self) -> Result<(), SimplicialError> {
        for n in 2..self.faces.len() {
            for i in 0..self.faces[n].len() {
                let s = SimplexRef::cell(n, i);
                for b in 1..=n {
                    for a in 0..b {
                        let lhs = self.face(&self.face(&s, b), a);
                        let rhs = self.face(&self.face(&s, a), b - 1);
                        if lhs != rhs {
                            return Err(SimplicialError::Identity { dim: n, cell: i, i: a, j: b });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_vertices(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = vec![(0..self.count(0)).map(|v| vec![v]).collect()];
        for n in 1..self.faces.len() {
            let level = self.faces[n]
                .iter()
                .map(|faces| {
                    let tail = &faces[n];
                    let head = &faces[0];
                    let resolve = |r: &SimplexRef| -> Vec<usize> {
                        let base = &out[r.base_dim][r.base];
                        r.map.iter().map(|&p| base[p]).collect()
                    };
                    let mut v = resolve(tail);
                    v.push(*resolve(head).last().unwrap());
                    v
                })
                .collect();
            out.push(level);
        }
        out
    }

    /// Index of the nondegenerate `n`-cell with this exact vertex tuple, if
    /// it is unique.
    pub fn find_by_vertices(&self, tuple: &[usize]) -> Result<Option<usize>, SimplicialError> {
        let n = tuple.len() - 1;
        if n > self.dim() {
            return Ok(None);
        }
        let hits: Vec<usize> = (0..self.count(n))
            .filter(|&i| self.vertices[n][i] == tuple)
            .collect();
        match hits.len() {
            0 => Ok(None),
            1 => Ok(Some(hits[0])),
            _ => Err(SimplicialError::AmbiguousVertices(tuple.to_vec())),
        }
    }

    /// Normalized simplicial chain complex: `∂σ = Σ (−1)^i d_iσ`, degenerate
    /// faces dropped.
    pub fn chain_complex(&self) -> ChainComplex {
        if self.is_empty() {
            return ChainComplex::concentrated(Grading::Chain, 0, 0);
        }
        let dims = self.counts();
        ChainComplex::from_differentials(Grading::Chain, 0, dims.clone(), |n| {
            let n = n as usize;
            let mut m = IntegerMatrix::zeros(dims[n - 1], dims[n]);
            for (j, faces) in self.faces[n].iter().enumerate() {
                for (i, r) in faces.iter().enumerate() {
                    if !r.is_degenerate() {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        m[(r.base, j)] += BigInt::from(sign);
                    }
                }
            }
            m
        })
        .expect("simplicial identities imply ∂² = 0")
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub(crate) fn raw_faces(&self) -> &[Vec<Vec<SimplexRef>>] {
        &self.faces
    }
}
