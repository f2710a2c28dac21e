//! Small simplicial models for the integrality tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{pullback, IntegralityError};
use crate::algebra::{rational_solve, to_rational};
use crate::simplicial::builtins::{ball, rp2_collapse, sphere};
use crate::simplicial::{suspend_map, DeltaComplex, SimplicialMap};

/// A `g × g` grid of unit squares, each cut along its rising diagonal.
/// Vertex `(x, y)` has index `y·(g+1) + x`.
#[derive(Clone, Debug)]
pub struct Grid {
    pub size: usize,
    pub complex: DeltaComplex,
}

impl Grid {
    pub fn new(size: usize) -> Self {
        let w = size + 1;
        let mut facets = Vec::new();
        for y in 0..size {
            for x in 0..size {
                let a = y * w + x;
                facets.push(vec![a, a + 1, a + w + 1]);
                facets.push(vec![a, a + w, a + w + 1]);
            }
        }
        let complex = DeltaComplex::from_simplices(w * w, &facets, |v| v).expect("grid triangulation");
        Grid { size, complex }
    }

    pub fn vertex(&self, x: usize, y: usize) -> usize {
        y * (self.size + 1) + x
    }

    fn coords(&self, v: usize) -> (i64, i64) {
        let w = self.size + 1;
        ((v % w) as i64, (v / w) as i64)
    }

    /// 2-cochain giving square `(x, y)` the area `areas[y·g + x]`,
    /// counted positively on counterclockwise triangles.
    pub fn area_cochain(&self, areas: &[BigRational]) -> Result<Vec<BigRational>, IntegralityError> {
        let g = self.size;
        if areas.len() != g * g {
            return Err(IntegralityError::Length {
                what: "square areas",
                expected: g * g,
                found: areas.len(),
            });
        }
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        Ok((0..self.complex.count(2))
            .map(|t| {
                let tuple = self.complex.vertex_tuple(2, t);
                let [p, q, r] = [0, 1, 2].map(|i| self.coords(tuple[i]));
                let cross = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
                let (x, y) = (p.0.min(q.0).min(r.0) as usize, p.1.min(q.1).min(r.1) as usize);
                let value = &areas[y * g + x] * &half;
                if cross > 0 {
                    value
                } else {
                    -value
                }
            })
            .collect())
    }

    /// Uniform area on every square.
    pub fn uniform_area(&self, area: &BigRational) -> Vec<BigRational> {
        self.area_cochain(&vec![area.clone(); self.size * self.size])
            .expect("one area per square")
    }

    /// A circle with one vertex per path entry mapped onto the closed lattice
    /// path `path` (consecutive points adjacent along grid edges or diagonals).
    pub fn loop_map(&self, path: &[(usize, usize)]) -> Result<SimplicialMap, IntegralityError> {
        let images: Vec<usize> = path.iter().map(|&(x, y)| self.vertex(x, y)).collect();
        let m = images.len();
        let facets: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
        let circle = DeltaComplex::from_simplices(m, &facets, |v| images[v])?;
        Ok(SimplicialMap::from_vertex_map(circle, self.complex.clone(), &images)?)
    }

    /// Loop around the boundary of square `(x, y)`.
    pub fn square_loop(&self, x: usize, y: usize) -> SimplicialMap {
        self.loop_map(&[(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)])
            .expect("square boundary")
    }

    /// Loop around the outer boundary of the grid.
    pub fn boundary_loop(&self) -> SimplicialMap {
        let g = self.size;
        let mut path = Vec::new();
        path.extend((0..g).map(|x| (x, 0)));
        path.extend((0..g).map(|y| (g, y)));
        path.extend((1..=g).rev().map(|x| (x, g)));
        path.extend((1..=g).rev().map(|y| (0, y)));
        self.loop_map(&path).expect("grid boundary")
    }
}

/// A 3-cochain model of a relative cocycle `(ω, η)`.
#[derive(Clone, Debug)]
pub struct PrequantModel {
    pub map: SimplicialMap,
    pub omega: Vec<BigRational>,
    pub eta: Vec<BigRational>,
}

/// Solves `dω = Ψ*η` over `ℚ` for `ω`.
pub fn solve_omega(map: &SimplicialMap, eta: &[BigRational]) -> Result<Option<Vec<BigRational>>, IntegralityError> {
    let d2 = map.source().chain_complex().out_of(3).transpose();
    Ok(rational_solve(&d2, &pullback(map, 3, eta))?)
}

/// `Ψ = Σq : ΣℝP² → ΣS²`, with `η` dual to a generator of `H₃(ΣS²) = ℤ` and
/// `ω` solving `dω = Ψ*η`. `H₂(ΣℝP²) = ℤ/2`, and the relative class pairs
/// to `±1/2` with a generator of `H₃(Ψ)`.
pub fn suspended_projective_plane() -> PrequantModel {
    let (_, _, map) = suspend_map(&rp2_collapse()).expect("suspension of a simplicial map");
    let n = map.target().chain_complex();
    let fundamental = n.homology_group(3).quotient.free_generators()[0].clone();
    let cochains = n.dual();
    let eta_int = cochains
        .homology_group(3)
        .quotient
        .free_generators()
        .into_iter()
        .next()
        .expect("H³(ΣS²) = ℤ");
    let eta = to_rational(&eta_int);
    debug_assert_eq!(
        crate::algebra::rational::rational_int_dot(&eta, &fundamental).abs(),
        BigRational::from_integer(BigInt::from(1))
    );
    let omega = solve_omega(&map, &eta)
        .expect("shapes match")
        .expect("H³(ΣℝP²; ℚ) = 0");
    PrequantModel { map, omega, eta }
}

/// `Ψ` embeds a 3-ball as a facet of the boundary of the 4-simplex; `η` is
/// the given integer 3-cochain on the sphere and `ω` solves `dω = Ψ*η`.
pub fn ball_in_sphere(eta: &[i64]) -> Result<PrequantModel, IntegralityError> {
    let map = SimplicialMap::from_vertex_map(ball(3), sphere(3), &[0, 1, 2, 3])?;
    if eta.len() != map.target().count(3) {
        return Err(IntegralityError::Length {
            what: "η",
            expected: map.target().count(3),
            found: eta.len(),
        });
    }
    let eta: Vec<BigRational> = eta.iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let omega = solve_omega(&map, &eta)?.expect("the ball is acyclic");
    Ok(PrequantModel { map, omega, eta })
}
