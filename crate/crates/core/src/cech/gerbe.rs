//! Angle-valued cocycles and their integral classes.
//!
//! An angle `p`-cochain `a` with `δa ≡ 0 mod ℤ` determines the integer
//! `(p+1)`-cocycle `δã`, where `ã` is the stored lift in `[0, 1)`. Degree 2
//! gives gerbes and the Dixmier–Douady class; degree 1 gives line bundles and
//! their Chern class. Transition data is antisymmetric: `a_{i′i} = −a_{ii′}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{CechCochain, CechError, CoverMap, Nerve};
use crate::algebra::matrix::json_int_vec;
use crate::algebra::rational::rational_matvec;
use crate::algebra::{integer_solve, rational_solve, AbelianGroupPresentation, ClassCoordinates};
use crate::chain::{mapping_cocone, ChainComplex, Coefficients, ConeComplex};

/// A class in integral cohomology together with the representative it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyClass {
    pub degree: i64,
    pub group: AbelianGroupPresentation,
    pub coordinates: ClassCoordinates,
    #[serde(with = "json_int_vec")]
    pub representative: Vec<BigInt>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.is_zero()
    }

    /// Class of the integer cocycle `z` in degree `q` of `complex`.
    pub fn of(complex: &ChainComplex, q: i64, z: Vec<BigInt>) -> Result<Self, CechError> {
        let h = complex.homology_group(q);
        let coordinates = h.class_of(&z).ok_or(CechError::NotACocycle { degree: q })?;
        Ok(CohomologyClass {
            degree: q,
            group: h.group().clone(),
            coordinates,
            representative: z,
        })
    }
}

fn integral(v: &[BigRational], what: &str) -> Result<Vec<BigInt>, CechError> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect::<Option<_>>()
        .ok_or_else(|| CechError::NotIntegral(what.to_string()))
}

fn require_angle(a: &CechCochain) -> Result<(), CechError> {
    if a.coefficients() != Coefficients::Angle {
        return Err(CechError::Coefficients {
            expected: Coefficients::Angle,
            found: a.coefficients(),
        });
    }
    Ok(())
}

/// The log-lift Bockstein `δã ∈ C^{p+1}(ℤ)` of an angle cocycle.
pub fn bockstein(nerve: &Nerve, a: &CechCochain) -> Result<Vec<BigInt>, CechError> {
    require_angle(a)?;
    integral(&a.lifted_coboundary(nerve), "δa is not integer valued, so a is not an angle cocycle")
}

/// An angle cochain `a` with `δã = c`, if `c` is a coboundary over `ℚ`.
/// Rational obstructions make this impossible for classes of infinite order.
pub fn bockstein_preimage(nerve: &Nerve, degree: usize, c: &[BigInt]) -> Result<Option<CechCochain>, CechError> {
    let rhs: Vec<BigRational> = c.iter().cloned().map(BigRational::from_integer).collect();
    let Some(x) = rational_solve(&nerve.coboundary(degree), &rhs)? else {
        return Ok(None);
    };
    let a = CechCochain::from_values(nerve, degree, Coefficients::Angle, x)?;
    Ok(Some(a))
}

/// Gerbe data `t = exp(2πi·a)` on a nerve, with `δt = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GerbeCocycle {
    nerve: Nerve,
    a: CechCochain,
}

impl GerbeCocycle {
    pub fn new(nerve: Nerve, a: CechCochain) -> Result<Self, CechError> {
        bockstein(&nerve, &a)?;
        Ok(GerbeCocycle { nerve, a })
    }

    pub fn nerve(&self) -> &Nerve {
        &self.nerve
    }

    pub fn data(&self) -> &CechCochain {
        &self.a
    }

    /// Degree of the characteristic class (3 for gerbes, 2 for line bundles).
    pub fn class_degree(&self) -> i64 {
        self.a.degree() as i64 + 1
    }

    pub fn dixmier_douady_class(&self) -> CohomologyClass {
        let z = bockstein(&self.nerve, &self.a).expect("checked at construction");
        CohomologyClass::of(&self.nerve.cochain_complex(), self.class_degree(), z).expect("δã is a cocycle")
    }

    pub fn add(&self, other: &GerbeCocycle) -> Result<GerbeCocycle, CechError> {
        if self.nerve != other.nerve {
            return Err(CechError::Schema("gerbes live on different nerves".into()));
        }
        GerbeCocycle::new(self.nerve.clone(), self.a.add(&other.a)?)
    }

    /// `Φ*t` on the source nerve of `map`.
    pub fn pullback(&self, map: &CoverMap) -> Result<GerbeCocycle, CechError> {
        if map.target() != &self.nerve {
            return Err(CechError::Schema("gerbe does not live on the target nerve".into()));
        }
        GerbeCocycle::new(map.source().clone(), self.a.pullback(map))
    }
}

/// A gerbe `t` on the target with a trivialization `s` of `Φ*t`, in angle
/// coordinates: `a` on the target, `b` on the source, `Φ*a − δb ≡ 0 mod ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeGerbeCocycle {
    map: CoverMap,
    a: CechCochain,
    b: CechCochain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeClass {
    pub class: CohomologyClass,
    /// The cocycle is a coboundary by a direct integer solve of `d x = (α, β)`.
    pub trivial_by_solve: bool,
    /// Image in the cohomology of the target nerve.
    pub target_image: CohomologyClass,
    /// Class of the `t`-part on its own.
    pub target_class: CohomologyClass,
}

impl RelativeGerbeCocycle {
    pub fn new(map: CoverMap, a: CechCochain, b: CechCochain) -> Result<Self, CechError> {
        require_angle(&a)?;
        require_angle(&b)?;
        if b.degree() + 1 != a.degree() {
            return Err(CechError::Schema(format!(
                "source data has degree {}, target data degree {}",
                b.degree(),
                a.degree()
            )));
        }
        bockstein(map.target(), &a)?;
        let defect = a.pullback(&map).sub(&b.coboundary(map.source()))?;
        if !defect.is_zero() {
            return Err(CechError::RelativeCondition);
        }
        Ok(RelativeGerbeCocycle { map, a, b })
    }

    pub fn map(&self) -> &CoverMap {
        &self.map
    }

    pub fn target_data(&self) -> &CechCochain {
        &self.a
    }

    pub fn source_data(&self) -> &CechCochain {
        &self.b
    }

    pub fn class_degree(&self) -> i64 {
        self.a.degree() as i64 + 1
    }

    /// The integer relative cocycle `(Φ*ã − δb̃, δã)` in the cocone of `Φ*`.
    pub fn integer_cocycle(&self) -> Vec<BigInt> {
        let a_lift = self.a.values();
        let pulled = rational_matvec(&self.map.pullback_matrix(self.a.degree()), a_lift);
        let db = self.b.lifted_coboundary(self.map.source());
        let first: Vec<BigRational> = pulled.iter().zip(&db).map(|(x, y)| x - y).collect();
        let first = integral(&first, "Φ*ã − δb̃").expect("checked at construction");
        let second = bockstein(self.map.target(), &self.a).expect("checked at construction");
        first.into_iter().chain(second).collect()
    }

    pub fn relative_class(&self) -> Result<RelativeClass, CechError> {
        let cone = relative_cocone(&self.map)?;
        let q = self.class_degree();
        let z = self.integer_cocycle();
        let class = CohomologyClass::of(cone.complex(), q, z.clone())?;
        let trivial_by_solve = integer_solve(&cone.complex().into(q), &z)?.is_some();
        if trivial_by_solve != class.is_zero() {
            return Err(CechError::Inconsistent("class coordinates and direct solve disagree"));
        }
        let target = self.map.target().cochain_complex();
        let projected = cone.second_projection(q).mul_vec(&z)?;
        let target_image = CohomologyClass::of(&target, q, projected)?;
        let target_class = GerbeCocycle::new(self.map.target().clone(), self.a.clone())?.dixmier_douady_class();
        Ok(RelativeClass {
            class,
            trivial_by_solve,
            target_image,
            target_class,
        })
    }
}

/// Cocone of `Φ* : C•(N) → C•(M)`: `Cone^q = C^{q−1}(M) ⊕ C^q(N)`.
pub fn relative_cocone(map: &CoverMap) -> Result<ConeComplex, CechError> {
    Ok(mapping_cocone(&map.pullback())?)
}

pub fn cech_cohomology(nerve: &Nerve, coefficients: Coefficients, q: i64) -> Result<AbelianGroupPresentation, CechError> {
    Ok(nerve.cochain_complex().homology_with(q, coefficients)?)
}

pub fn relative_cech_cohomology(
    map: &CoverMap,
    coefficients: Coefficients,
    q: i64,
) -> Result<AbelianGroupPresentation, CechError> {
    Ok(relative_cocone(map)?.complex().homology_with(q, coefficients)?)
}
