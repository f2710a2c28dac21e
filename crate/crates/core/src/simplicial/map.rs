use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::delta::RefRepr;
use super::{DeltaComplex, SimplexRef, SimplicialError};
use crate::algebra::IntegerMatrix;
use crate::chain::ChainMap;

/// A map of delta complexes, given by the image of every nondegenerate cell
/// as a simplex (possibly degenerate) of the same dimension in the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct SimplicialMap {
    source: DeltaComplex,
    target: DeltaComplex,
    images: Vec<Vec<SimplexRef>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapRepr {
    source: DeltaComplex,
    target: DeltaComplex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    images: Option<Vec<Vec<RefRepr>>>,
}

impl TryFrom<MapRepr> for SimplicialMap {
    type Error = SimplicialError;
    fn try_from(r: MapRepr) -> Result<Self, SimplicialError> {
        match (r.vertex_map, r.images) {
            (Some(v), None) => SimplicialMap::from_vertex_map(r.source, r.target, &v),
            (None, Some(images)) => {
                let images = images
                    .into_iter()
                    .enumerate()
                    .map(|(n, level)| level.into_iter().map(|x| x.resolve(n)).collect())
                    .collect();
                SimplicialMap::new(r.source, r.target, images)
            }
            _ => Err(SimplicialError::Schema(
                "give exactly one of `vertex_map` and `images`".into(),
            )),
        }
    }
}

impl From<SimplicialMap> for MapRepr {
    fn from(m: SimplicialMap) -> Self {
        MapRepr {
            images: Some(
                m.images
                    .iter()
                    .map(|level| level.iter().map(RefRepr::from_ref).collect())
                    .collect(),
            ),
            source: m.source,
            target: m.target,
            vertex_map: None,
        }
    }
}

impl SimplicialMap {
    /// Checks that images have the right dimension and commute with faces.
    pub fn new(
        source: DeltaComplex,
        target: DeltaComplex,
        images: Vec<Vec<SimplexRef>>,
    ) -> Result<Self, SimplicialError> {
        for n in 0..=source.dim() {
            let level = images.get(n).map_or(0, Vec::len);
            if level != source.count(n) {
                return Err(SimplicialError::ImageCount {
                    dim: n,
                    expected: source.count(n),
                    found: level,
                });
            }
            for (i, r) in images[n].iter().enumerate() {
                target
                    .check_ref(r, n)
                    .map_err(|why| SimplicialError::BadImage { dim: n, cell: i, why })?;
            }
        }
        let f = SimplicialMap {
            source,
            target,
            images,
        };
        for n in 1..=f.source.dim() {
            for i in 0..f.source.count(n) {
                let img = &f.images[n][i];
                for (k, face) in f.source.faces_of(n, i).iter().enumerate() {
                    if f.target.face(img, k) != f.image_of(face) {
                        return Err(SimplicialError::NotSimplicial { dim: n, cell: i, face: k });
                    }
                }
            }
        }
        Ok(f)
    }

    /// Map determined by vertices: each source cell goes to the target cell
    /// with the image vertex tuple, or to a degeneracy of one when the tuple
    /// repeats a vertex consecutively.
    pub fn from_vertex_map(
        source: DeltaComplex,
        target: DeltaComplex,
        vertex_map: &[usize],
    ) -> Result<Self, SimplicialError> {
        if vertex_map.len() != source.count(0) {
            return Err(SimplicialError::ImageCount {
                dim: 0,
                expected: source.count(0),
                found: vertex_map.len(),
            });
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.count(0)) {
            return Err(SimplicialError::UnknownVertex(v));
        }
        let mut images = Vec::new();
        for n in 0..=source.dim() {
            let mut level = Vec::with_capacity(source.count(n));
            for i in 0..source.count(n) {
                let tuple: Vec<usize> = source.vertex_tuple(n, i).iter().map(|&v| vertex_map[v]).collect();
                level.push(Self::locate(&target, &tuple)?);
            }
            images.push(level);
        }
        SimplicialMap::new(source, target, images)
    }

    fn locate(target: &DeltaComplex, tuple: &[usize]) -> Result<SimplexRef, SimplicialError> {
        if let Some(i) = target.find_by_vertices(tuple)? {
            return Ok(SimplexRef::cell(tuple.len() - 1, i));
        }
        let mut distinct = tuple.to_vec();
        distinct.dedup();
        let mut map = Vec::with_capacity(tuple.len());
        let mut k = 0;
        for (p, v) in tuple.iter().enumerate() {
            if p > 0 && *v != tuple[p - 1] {
                k += 1;
            }
            map.push(k);
        }
        if distinct.len() == tuple.len() {
            return Err(SimplicialError::NoCell(tuple.to_vec()));
        }
        let base = target
            .find_by_vertices(&distinct)?
            .ok_or_else(|| SimplicialError::NoCell(tuple.to_vec()))?;
        Ok(SimplexRef {
            base_dim: distinct.len() - 1,
            base,
            map,
        })
    }

    pub fn identity(k: &DeltaComplex) -> Self {
        let images = (0..=k.dim())
            .map(|n| (0..k.count(n)).map(|i| SimplexRef::cell(n, i)).collect())
            .collect();
        SimplicialMap::new(k.clone(), k.clone(), images).expect("identity is simplicial")
    }

    pub fn source(&self) -> &DeltaComplex {
        &self.source
    }

    pub fn target(&self) -> &DeltaComplex {
        &self.target
    }

    pub fn image(&self, n: usize, i: usize) -> &SimplexRef {
        &self.images[n][i]
    }

    /// Image of an arbitrary simplex of the source.
    pub fn image_of(&self, r: &SimplexRef) -> SimplexRef {
        self.images[r.base_dim][r.base].degenerate_along(&r.map)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SimplicialMap) -> Result<SimplicialMap, SimplicialError> {
        if other.target != self.source {
            return Err(SimplicialError::Schema("maps are not composable".into()));
        }
        let images = other
            .images
            .iter()
            .map(|level| level.iter().map(|r| self.image_of(r)).collect())
            .collect();
        SimplicialMap::new(other.source.clone(), self.target.clone(), images)
    }

    /// `Φ_*` on normalized chains.
    pub fn chain_map(&self) -> ChainMap {
        let x = self.source.chain_complex();
        let y = self.target.chain_complex();
        let mut comps = BTreeMap::new();
        for n in 0..=self.source.dim() {
            let mut m = IntegerMatrix::zeros(self.target.count(n), self.source.count(n));
            for (i, r) in self.images[n].iter().enumerate() {
                if !r.is_degenerate() {
                    m[(r.base, i)] = BigInt::from(1);
                }
            }
            comps.insert(n as i64, m);
        }
        ChainMap::new(x, y, comps).expect("simplicial maps induce chain maps")
    }
}
