use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rat, scale, LieError, RootSystem};
use crate::algebra::rational::denominator_lcm;
use crate::algebra::rational_matrix_solve;
use crate::cech::Nerve;

/// The fundamental alcove `𝔄 = {ξ : ⟨α_i, ξ⟩ ≥ 0, ⟨α₀, ξ⟩ ≥ −1}`.
///
/// `vertices[0] = 0` and `vertices[j] = ω_j^∨ / m_j`. Vertex `j ≥ 1` lies on
/// every wall except `⟨α_j, ·⟩ = 0`; vertex 0 lies on every wall except the
/// affine one.
#[derive(Clone, Debug)]
pub struct Alcove {
    pub vertices: Vec<Vec<BigRational>>,
}

impl Alcove {
    pub fn new(rs: &RootSystem) -> Self {
        let mut vertices = vec![vec![BigRational::zero(); rs.ambient_dim()]];
        for (w, &m) in rs.fundamental_coweights().iter().zip(rs.marks()) {
            vertices.push(scale(&rat(1, m), w));
        }
        Alcove { vertices }
    }

    /// Values of the `d + 1` wall functionals at `ξ`, ordered so that entry
    /// `j` vanishes on the face opposite vertex `j`: `⟨α_j, ξ⟩` for `j ≥ 1`
    /// and `1 + ⟨α₀, ξ⟩` for `j = 0`.
    pub fn walls(rs: &RootSystem, xi: &[BigRational]) -> Vec<BigRational> {
        let mut w = vec![BigRational::one() + rs.inner(&rs.lowest_root(), xi)];
        w.extend(rs.simple_roots().iter().map(|a| rs.inner(a, xi)));
        w
    }

    pub fn contains(rs: &RootSystem, xi: &[BigRational]) -> bool {
        Self::contains_scaled(rs, xi, &BigRational::one())
    }

    /// Membership in `k𝔄`.
    pub fn contains_scaled(rs: &RootSystem, v: &[BigRational], k: &BigRational) -> bool {
        k + rs.inner(&rs.lowest_root(), v) >= BigRational::zero()
            && rs.simple_roots().iter().all(|a| !rs.inner(a, v).is_negative())
    }
}

/// `Λ*` and `Λ` for the simply connected group: the fundamental weights and
/// the simple coroots, both as vectors of `𝔱`.
#[derive(Clone, Debug)]
pub struct WeightLattice {
    pub weights: Vec<Vec<BigRational>>,
    pub coroots: Vec<Vec<BigRational>>,
}

impl WeightLattice {
    pub fn new(rs: &RootSystem) -> Self {
        WeightLattice {
            weights: rs.fundamental_weights(),
            coroots: rs.simple_coroots(),
        }
    }

    /// `⟨ω_i, α_j^∨⟩`; the identity matrix when the bases are dual.
    pub fn pairing_matrix(&self, rs: &RootSystem) -> Vec<Vec<BigRational>> {
        self.weights
            .iter()
            .map(|w| self.coroots.iter().map(|c| rs.inner(w, c)).collect())
            .collect()
    }

    /// Coordinates of `v` in the fundamental weights, solved exactly and
    /// checked against the pairings `⟨v, α_i^∨⟩`.
    pub fn coordinates(&self, rs: &RootSystem, v: &[BigRational]) -> Result<Vec<BigRational>, LieError> {
        let d = self.weights.len();
        let rows: Vec<Vec<BigRational>> = (0..v.len())
            .map(|r| (0..d).map(|c| self.weights[c][r].clone()).collect())
            .collect();
        let c = rational_matrix_solve(&rows, d, v)?.ok_or(LieError::NotInTorus)?;
        let pairings: Vec<BigRational> = self.coroots.iter().map(|a| rs.inner(v, a)).collect();
        if c != pairings {
            return Err(LieError::Inconsistent("weight coordinates disagree with coroot pairings"));
        }
        Ok(c)
    }

    pub fn contains(&self, rs: &RootSystem, v: &[BigRational]) -> Result<bool, LieError> {
        Ok(self.coordinates(rs, v)?.iter().all(BigRational::is_integer))
    }
}

fn check_in_torus(rs: &RootSystem, xi: &[BigRational]) -> Result<(), LieError> {
    rs.simple_coordinates(xi)?.map(|_| ()).ok_or(LieError::NotInTorus)
}

/// Smallest `k ≥ 1` with `k·B(μ_j) ∈ Λ*` for every alcove vertex, found by
/// testing `k = 1, 2, …` in turn.
pub fn min_vertex_level(rs: &RootSystem) -> Result<u64, LieError> {
    let alcove = Alcove::new(rs);
    let lattice = WeightLattice::new(rs);
    let coords = alcove
        .vertices
        .iter()
        .map(|mu| lattice.coordinates(rs, mu))
        .collect::<Result<Vec<_>, _>>()?;
    // every vertex is rational, so the search ends by the lcm of denominators
    let bound = denominator_lcm(coords.iter().flatten());
    for k in 1u64.. {
        let kq = BigRational::from_integer(k.into());
        if coords.iter().flatten().all(|c| (c * &kq).is_integer()) {
            return Ok(k);
        }
        if BigInt::from(k) > bound {
            break;
        }
    }
    Err(LieError::Inconsistent("no level found below the denominator bound"))
}

/// Verdict on the conjugacy class of `exp ξ` at level `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub level: i64,
    pub in_alcove: bool,
    /// Coordinates of `k·B(ξ)` in the fundamental weights.
    pub weight_coordinates: Vec<BigRational>,
    pub in_lattice: bool,
    pub prequantizable: bool,
}

/// Level-`k` pre-quantizability of the class through `ξ`: `ξ ∈ 𝔄` and
/// `k·B(ξ) ∈ Λ*`, i.e. `B_k(ξ) ∈ Λ* ∩ k𝔄`.
pub fn conjugacy_prequant(rs: &RootSystem, xi: &[BigRational], k: i64) -> Result<ConjugacyVerdict, LieError> {
    if k < 1 {
        return Err(LieError::Level(k));
    }
    check_in_torus(rs, xi)?;
    let kq = BigRational::from_integer(k.into());
    let scaled = scale(&kq, xi);
    let in_alcove = Alcove::contains_scaled(rs, &scaled, &kq);
    let weight_coordinates = WeightLattice::new(rs).coordinates(rs, &scaled)?;
    let in_lattice = weight_coordinates.iter().all(BigRational::is_integer);
    Ok(ConjugacyVerdict {
        level: k,
        in_alcove,
        weight_coordinates,
        in_lattice,
        prequantizable: in_alcove && in_lattice,
    })
}

/// A point of `𝔄` in the affine Weyl orbit of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub point: Vec<BigRational>,
    pub reflections: usize,
}

/// Reflects `ξ` across violated walls of `𝔄` until none is violated. Each
/// step crosses one hyperplane separating `ξ` from `𝔄`, so this terminates.
pub fn reduce_to_alcove(rs: &RootSystem, xi: &[BigRational]) -> Result<Reduction, LieError> {
    check_in_torus(rs, xi)?;
    let theta = rs.highest_root();
    let mut point = xi.to_vec();
    let mut reflections = 0;
    loop {
        if let Some(a) = rs.simple_roots().iter().find(|a| rs.inner(a, &point).is_negative()) {
            point = rs.reflect(&point, a, &BigRational::zero());
        } else if rs.inner(&theta, &point) > BigRational::one() {
            point = rs.reflect(&point, &theta, &BigRational::one());
        } else {
            return Ok(Reduction { point, reflections });
        }
        reflections += 1;
    }
}

/// `{j : λ ∈ 𝔄_j}`, where `𝔄_j` is `𝔄` minus the closed face opposite `μ_j`.
pub fn alcove_membership(rs: &RootSystem, lambda: &[BigRational]) -> Result<Vec<usize>, LieError> {
    check_in_torus(rs, lambda)?;
    let walls = Alcove::walls(rs, lambda);
    if walls.iter().any(Signed::is_negative) {
        return Err(LieError::OutsideAlcove);
    }
    Ok(walls.iter().enumerate().filter(|(_, w)| w.is_positive()).map(|(j, _)| j).collect())
}

/// Nerve of the cover `{𝔄_j}`: every family of indices meets.
pub fn cover_nerve(rs: &RootSystem) -> Nerve {
    Nerve::full_simplex(rs.rank() + 1)
}
