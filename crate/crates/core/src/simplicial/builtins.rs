//! Small named spaces and maps.

use rand::Rng;

use super::cone::suspend_map;
use super::{DeltaComplex, SimplexRef, SimplicialError, SimplicialMap};

pub const SPACE_NAMES: &[&str] = &[
    "point",
    "s0",
    "circle:<m>",
    "disk",
    "sphere2",
    "sphere3",
    "ball3",
    "rp2",
    "s2-collapsed",
    "suspended-rp2",
];

pub const MAP_NAMES: &[&str] = &[
    "deg2-circle-map",
    "s0-in-circle",
    "id-circle",
    "circle-to-point",
    "vertex-in-disk",
    "empty-into-circle",
    "rp2-collapse",
    "suspended-rp2-collapse",
    "ball-in-sphere3",
];

fn vertex_face(v: usize) -> SimplexRef {
    SimplexRef::cell(0, v)
}

pub fn point() -> DeltaComplex {
    DeltaComplex::from_simplices(1, &[vec![0]], |v| v).expect("point")
}

pub fn s0() -> DeltaComplex {
    DeltaComplex::from_simplices(2, &[vec![0], vec![1]], |v| v).expect("two points")
}

/// `m` vertices, edge `i` running from vertex `i` to vertex `i+1 mod m`.
pub fn circle(m: usize) -> Result<DeltaComplex, SimplicialError> {
    if m == 0 {
        return Err(SimplicialError::UnknownBuiltin("circle:0".into()));
    }
    let edges = (0..m).map(|i| vec![vertex_face((i + 1) % m), vertex_face(i)]).collect();
    DeltaComplex::new(vec![vec![Vec::new(); m], edges])
}

pub fn disk() -> DeltaComplex {
    DeltaComplex::from_simplices(3, &[vec![0, 1, 2]], |v| v).expect("triangle")
}

/// Boundary of the standard `(d+1)`-simplex.
pub fn sphere(d: usize) -> DeltaComplex {
    let n = d + 2;
    let facets: Vec<Vec<usize>> = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
    DeltaComplex::from_simplices(n, &facets, |v| v).expect("simplex boundary")
}

pub fn ball(d: usize) -> DeltaComplex {
    DeltaComplex::from_simplices(d + 1, &[(0..=d).collect()], |v| v).expect("simplex")
}

/// Two vertices `P = 0`, `Q = 1`; edges `a, b : P → Q`, loop `c` at `P`;
/// triangles with faces `(b, a, c)` and `(a, b, c)`.
pub fn rp2() -> DeltaComplex {
    let e = |i| SimplexRef::cell(1, i);
    let edges = vec![
        vec![vertex_face(1), vertex_face(0)],
        vec![vertex_face(1), vertex_face(0)],
        vec![vertex_face(0), vertex_face(0)],
    ];
    let triangles = vec![vec![e(1), e(0), e(2)], vec![e(0), e(1), e(2)]];
    DeltaComplex::new(vec![vec![Vec::new(); 2], edges, triangles]).expect("RP²")
}

/// `S²` as one vertex and one 2-cell with all faces degenerate.
pub fn s2_collapsed() -> DeltaComplex {
    let p = SimplexRef {
        base_dim: 0,
        base: 0,
        map: vec![0, 0],
    };
    DeltaComplex::new(vec![vec![Vec::new()], Vec::new(), vec![vec![p.clone(), p.clone(), p]]]).expect("S²")
}

/// `ℝP² → S²` collapsing the 1-skeleton and one triangle.
pub fn rp2_collapse() -> SimplicialMap {
    let deg = |n: usize| SimplexRef {
        base_dim: 0,
        base: 0,
        map: vec![0; n + 1],
    };
    let images = vec![
        vec![deg(0), deg(0)],
        vec![deg(1), deg(1), deg(1)],
        vec![SimplexRef::cell(2, 0), deg(2)],
    ];
    SimplicialMap::new(rp2(), s2_collapsed(), images).expect("collapse map")
}

/// Degree-`w` style loop: `circle(m) → target` walking along the given
/// closed edge path. `steps[i]` is `None` for a constant edge or the target
/// edge traversed by source edge `i`.
pub fn loop_map(target: &DeltaComplex, start: usize, steps: &[Option<usize>]) -> Result<SimplicialMap, SimplicialError> {
    let m = steps.len();
    let mut verts = Vec::with_capacity(m + 1);
    let mut edges = Vec::with_capacity(m);
    let mut here = start;
    verts.push(here);
    for step in steps {
        match step {
            None => edges.push(SimplexRef {
                base_dim: 0,
                base: here,
                map: vec![0, 0],
            }),
            Some(e) => {
                let faces = target.faces_of(1, *e);
                if faces[1] != vertex_face(here) {
                    return Err(SimplicialError::NotSimplicial { dim: 1, cell: edges.len(), face: 1 });
                }
                here = faces[0].base;
                edges.push(SimplexRef::cell(1, *e));
            }
        }
        verts.push(here);
    }
    if here != start {
        return Err(SimplicialError::NotSimplicial { dim: 1, cell: m - 1, face: 0 });
    }
    verts.pop();
    let images = vec![verts.into_iter().map(vertex_face).collect(), edges];
    SimplicialMap::new(circle(m)?, target.clone(), images)
}

/// Random loop of length `m` in `circle(k)` (forward steps only), so its
/// degree is the number of steps divided by `k`.
pub fn random_circle_map<R: Rng>(rng: &mut R, m: usize, k: usize) -> SimplicialMap {
    let target = circle(k).expect("k ≥ 1");
    let winding = rng.gen_range(0..=m / k);
    let mut moving: Vec<bool> = (0..m).map(|i| i < winding * k).collect();
    for i in (1..m).rev() {
        moving.swap(i, rng.gen_range(0..=i));
    }
    let start = rng.gen_range(0..k);
    let mut here = start;
    let steps: Vec<Option<usize>> = moving
        .iter()
        .map(|&mv| {
            if mv {
                let e = here;
                here = (here + 1) % k;
                Some(e)
            } else {
                None
            }
        })
        .collect();
    loop_map(&target, start, &steps).expect("closed forward walk")
}

/// Random loop of length `m` in [`rp2`] going around the loop `c` some
/// number of times.
pub fn random_rp2_loop<R: Rng>(rng: &mut R, m: usize) -> SimplicialMap {
    let steps: Vec<Option<usize>> = (0..m).map(|_| rng.gen_bool(0.5).then_some(2)).collect();
    loop_map(&rp2(), 0, &steps).expect("loops at P")
}

pub fn space(name: &str) -> Result<DeltaComplex, SimplicialError> {
    let unknown = || SimplicialError::UnknownBuiltin(name.to_string());
    Ok(match name {
        "point" => point(),
        "s0" => s0(),
        "circle" => circle(3)?,
        "disk" => disk(),
        "sphere2" => sphere(2),
        "sphere3" => sphere(3),
        "ball3" => ball(3),
        "rp2" => rp2(),
        "s2-collapsed" => s2_collapsed(),
        "suspended-rp2" => super::cone::suspension(&rp2()).complex,
        other => {
            let m = other
                .strip_prefix("circle:")
                .and_then(|m| m.parse::<usize>().ok())
                .ok_or_else(unknown)?;
            circle(m).map_err(|_| unknown())?
        }
    })
}

pub fn map(name: &str) -> Result<SimplicialMap, SimplicialError> {
    let map = match name {
        "deg2-circle-map" => {
            let steps: Vec<Option<usize>> = (0..6).map(|i| Some(i % 3)).collect();
            loop_map(&circle(3)?, 0, &steps)?
        }
        "s0-in-circle" => SimplicialMap::from_vertex_map(s0(), circle(3)?, &[0, 1])?,
        "id-circle" => SimplicialMap::identity(&circle(3)?),
        "circle-to-point" => SimplicialMap::from_vertex_map(circle(3)?, point(), &[0, 0, 0])?,
        "vertex-in-disk" => SimplicialMap::from_vertex_map(point(), disk(), &[0])?,
        "empty-into-circle" => SimplicialMap::new(DeltaComplex::empty(), circle(3)?, vec![Vec::new()])?,
        "rp2-collapse" => rp2_collapse(),
        "suspended-rp2-collapse" => suspend_map(&rp2_collapse())?.2,
        "ball-in-sphere3" => {
            // one facet of ∂Δ⁴ is a 3-ball
            SimplicialMap::from_vertex_map(ball(3), sphere(3), &[0, 1, 2, 3])?
        }
        _ => return Err(SimplicialError::UnknownBuiltin(name.to_string())),
    };
    Ok(map)
}
