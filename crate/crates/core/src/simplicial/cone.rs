//! Mapping cone and mapping cylinder of a simplicial map as delta complexes.
//!
//! The cone is built as `(apex * X) ⊔ Y` with the base of the join glued to
//! `Y` along `f`. The cell `Cσ` over an `n`-cell `σ = [v₀…vₙ]` is
//! `[apex, v₀, …, vₙ]`, so `d₀Cσ = f(σ)` and `dᵢCσ = C(dᵢ₋₁σ)`.
//!
//! The cylinder uses the ordered prism decomposition of `σ × I`:
//! `Pₖ(σ) = [(v₀,0)…(vₖ,0),(vₖ,1)…(vₙ,1)]` for `k = 0..=n`, together with the
//! sections `Qⱼ(σ)` whose first `j` vertices sit at level 0. `Q₀(σ)` is glued
//! to `f(σ)` and `Q_{n+1}(σ) = σ × 0` is the bottom copy of `X`.

use super::{DeltaComplex, SimplexRef, SimplicialError, SimplicialMap};
use crate::chain::ChainComplex;

/// Cells of the mapping cone, with the bookkeeping needed to map into it.
#[derive(Clone, Debug)]
pub struct TopologicalCone {
    pub complex: DeltaComplex,
    /// Index of the apex among the vertices.
    pub apex: usize,
    /// `offsets[n]`: index of the first cone cell `Cσ` among the `n`-cells.
    offsets: Vec<usize>,
}

impl TopologicalCone {
    /// Index of `Cσ` (an `(n+1)`-cell) for the `i`-th `n`-cell `σ` of `X`.
    pub fn cone_cell(&self, n: usize, i: usize) -> usize {
        self.offsets[n + 1] + i
    }

    /// `C(s)` for a simplex `s` of `X`.
    pub fn cone_ref(&self, s: &SimplexRef) -> SimplexRef {
        let mut map = vec![0];
        map.extend(s.map.iter().map(|&p| p + 1));
        SimplexRef {
            base_dim: s.base_dim + 1,
            base: self.cone_cell(s.base_dim, s.base),
            map,
        }
    }
}

pub fn topological_mapping_cone(f: &SimplicialMap) -> TopologicalCone {
    let x = f.source();
    let y = f.target();
    let top = (x.dim() + 1).max(y.dim());
    let offsets: Vec<usize> = (0..=top + 1)
        .map(|n| if n == 0 { y.count(0) + 1 } else { y.count(n) })
        .collect();
    let apex = y.count(0);
    let shell = TopologicalCone {
        complex: DeltaComplex::empty(),
        apex,
        offsets,
    };
    let mut faces: Vec<Vec<Vec<SimplexRef>>> = (0..=top)
        .map(|n| y.raw_faces().get(n).cloned().unwrap_or_default())
        .collect();
    faces[0].push(Vec::new());
    if x.is_empty() {
        let complex = DeltaComplex::new(faces).expect("disjoint union with a point");
        return TopologicalCone { complex, ..shell };
    }
    for n in 0..=x.dim() {
        for i in 0..x.count(n) {
            let mut cell = vec![f.image(n, i).clone()];
            if n == 0 {
                cell.push(SimplexRef::cell(0, apex));
            } else {
                cell.extend(x.faces_of(n, i).iter().map(|s| shell.cone_ref(s)));
            }
            faces[n + 1].push(cell);
        }
    }
    let complex = DeltaComplex::new(faces).expect("cone faces satisfy the simplicial identities");
    TopologicalCone { complex, ..shell }
}

/// Unreduced suspension, as the cone of the map to a point.
pub fn suspension(k: &DeltaComplex) -> TopologicalCone {
    let point = DeltaComplex::from_simplices(1, &[vec![0]], |v| v).expect("point");
    let collapse = SimplicialMap::from_vertex_map(k.clone(), point, &vec![0; k.count(0)])
        .expect("constant map is simplicial");
    topological_mapping_cone(&collapse)
}

/// `Σg : ΣK → ΣL`, sending the cone point to the cone point, the collapsed
/// base to the collapsed base, and `Cσ` to `C(g(σ))`.
pub fn suspend_map(g: &SimplicialMap) -> Result<(TopologicalCone, TopologicalCone, SimplicialMap), SimplicialError> {
    let sk = suspension(g.source());
    let sl = suspension(g.target());
    let k = g.source();
    let mut images: Vec<Vec<SimplexRef>> = vec![Vec::new(); sk.complex.dim() + 1];
    images[0] = vec![SimplexRef::cell(0, 0), SimplexRef::cell(0, sl.apex)];
    for n in 0..=k.dim() {
        for i in 0..k.count(n) {
            images[n + 1].push(sl.cone_ref(g.image(n, i)));
        }
    }
    let map = SimplicialMap::new(sk.complex.clone(), sl.complex.clone(), images)?;
    Ok((sk, sl, map))
}

/// Mapping cylinder with the subcomplex `X × 0` recorded.
#[derive(Clone, Debug)]
pub struct MappingCylinder {
    pub complex: DeltaComplex,
    /// `bottom[n]`: indices of the `n`-cells forming `X × 0`.
    pub bottom: Vec<Vec<usize>>,
}

struct CylinderIndex<'a> {
    f: &'a SimplicialMap,
    /// `q_start[n][i]`: index of `Q₁(σ)` for the `i`-th `n`-cell.
    q_start: Vec<Vec<usize>>,
    /// `p_start[n][i]`: index of `P₀(σ)` among the `(n+1)`-cells.
    p_start: Vec<Vec<usize>>,
}

impl CylinderIndex<'_> {
    /// `Qⱼ(s)` for a possibly degenerate `s` with `s.dim() = n`.
    fn q(&self, s: &SimplexRef, j: usize) -> SimplexRef {
        let n = s.dim();
        let m = s.base_dim;
        let map = &s.map;
        if j > 0 && j <= n && map[j - 1] == map[j] {
            let a = map[j];
            let t: Vec<usize> = (0..=n).map(|p| if p < j { map[p] } else { map[p] + 1 }).collect();
            return SimplexRef {
                base_dim: m + 1,
                base: self.p_start[m][s.base] + a,
                map: t,
            };
        }
        let jj = if j == 0 { 0 } else if j == n + 1 { m + 1 } else { map[j] };
        if jj == 0 {
            return self.f.image(m, s.base).degenerate_along(map);
        }
        SimplexRef {
            base_dim: m,
            base: self.q_start[m][s.base] + jj - 1,
            map: map.clone(),
        }
    }

    /// `Pₖ(s)`.
    fn p(&self, s: &SimplexRef, k: usize) -> SimplexRef {
        let n = s.dim();
        let map = &s.map;
        let t: Vec<usize> = (0..=n + 1)
            .map(|p| if p <= k { map[p] } else { map[p - 1] + 1 })
            .collect();
        SimplexRef {
            base_dim: s.base_dim + 1,
            base: self.p_start[s.base_dim][s.base] + map[k],
            map: t,
        }
    }
}

pub fn mapping_cylinder(f: &SimplicialMap) -> MappingCylinder {
    let x = f.source();
    let y = f.target();
    let top = (x.dim() + 1).max(y.dim());
    let mut counts: Vec<usize> = (0..=top).map(|n| y.count(n)).collect();
    let mut q_start = vec![Vec::new(); x.dim() + 1];
    let mut p_start = vec![Vec::new(); x.dim() + 1];
    if !x.is_empty() {
        for n in 0..=x.dim() {
            for _ in 0..x.count(n) {
                q_start[n].push(counts[n]);
                counts[n] += n + 1;
            }
        }
        for n in 0..=x.dim() {
            for _ in 0..x.count(n) {
                p_start[n].push(counts[n + 1]);
                counts[n + 1] += n + 1;
            }
        }
    }
    let idx = CylinderIndex { f, q_start, p_start };
    let mut faces: Vec<Vec<Vec<SimplexRef>>> = (0..=top)
        .map(|n| {
            let mut level = y.raw_faces().get(n).cloned().unwrap_or_default();
            level.resize(counts[n], Vec::new());
            level
        })
        .collect();
    let mut bottom = vec![Vec::new(); top + 1];
    if !x.is_empty() {
        for n in 0..=x.dim() {
            for i in 0..x.count(n) {
                let sigma = SimplexRef::cell(n, i);
                let d: Vec<SimplexRef> = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|a| x.face(&sigma, a)).collect()
                };
                for j in 1..=n + 1 {
                    let cell = (0..if n == 0 { 0 } else { n + 1 })
                        .map(|a| if a < j { idx.q(&d[a], j - 1) } else { idx.q(&d[a], j) })
                        .collect();
                    faces[n][idx.q_start[n][i] + j - 1] = cell;
                }
                bottom[n].push(idx.q_start[n][i] + n);
                for k in 0..=n {
                    let cell = (0..=n + 1)
                        .map(|a| {
                            if a < k {
                                idx.p(&d[a], k - 1)
                            } else if a == k {
                                idx.q(&sigma, k)
                            } else if a == k + 1 {
                                idx.q(&sigma, k + 1)
                            } else {
                                idx.p(&d[a - 1], k)
                            }
                        })
                        .collect();
                    faces[n + 1][idx.p_start[n][i] + k] = cell;
                }
            }
        }
    }
    let complex = DeltaComplex::new(faces).expect("prism faces satisfy the simplicial identities");
    MappingCylinder { complex, bottom }
}

impl MappingCylinder {
    /// Chains of the cylinder modulo the subcomplex `X × 0`.
    pub fn relative_chain_complex(&self) -> ChainComplex {
        let full = self.complex.chain_complex();
        let keep: Vec<Vec<usize>> = (0..=self.complex.dim())
            .map(|n| {
                let drop = self.bottom.get(n).cloned().unwrap_or_default();
                (0..self.complex.count(n)).filter(|i| !drop.contains(i)).collect()
            })
            .collect();
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        ChainComplex::from_differentials(full.grading(), 0, dims, |n| {
            let n = n as usize;
            full.out_of(n as i64)
                .select_rows(keep[n - 1].iter().copied())
                .select_columns(keep[n].iter().copied())
        })
        .expect("quotient by a subcomplex")
    }
}
