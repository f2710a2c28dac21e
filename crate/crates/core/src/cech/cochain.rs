use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::nerve::sort_with_sign;
use super::{CechError, CoverMap, Nerve};
use crate::algebra::rational::{json_rat, rational_matvec};
use crate::chain::Coefficients;

/// A Čech `p`-cochain, stored by its values on the sorted `p`-simplices of a
/// nerve. Values on other orderings follow from antisymmetry.
///
/// Angle cochains are rationals taken modulo `ℤ` and kept in `[0, 1)`;
/// the stored value is the log-lift used by the Bockstein maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechCochain {
    degree: usize,
    coefficients: Coefficients,
    values: Vec<BigRational>,
}

/// Sparse JSON form; unlisted simplices are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainSpec {
    pub degree: usize,
    #[serde(default)]
    pub coefficients: Coefficients,
    #[serde(default)]
    pub values: Vec<CochainEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub simplex: Vec<usize>,
    #[serde(with = "json_rat")]
    pub value: BigRational,
}

fn normalize(c: Coefficients, x: &BigRational) -> Result<BigRational, CechError> {
    match c {
        Coefficients::Rational => Ok(x.clone()),
        Coefficients::Angle => Ok(x - x.floor()),
        Coefficients::Integer | Coefficients::Modular(_) => {
            if !x.is_integer() {
                return Err(CechError::NotIntegral(format!("value {x} with {c} coefficients")));
            }
            match c {
                Coefficients::Modular(m) => Ok(BigRational::from_integer(x.to_integer().mod_floor(&BigInt::from(m)))),
                _ => Ok(x.clone()),
            }
        }
    }
}

impl CechCochain {
    pub fn zero(nerve: &Nerve, degree: usize, coefficients: Coefficients) -> Self {
        CechCochain {
            degree,
            coefficients,
            values: vec![BigRational::zero(); nerve.count(degree)],
        }
    }

    /// Values listed in the order of `nerve.simplices(degree)`.
    pub fn from_values(
        nerve: &Nerve,
        degree: usize,
        coefficients: Coefficients,
        values: Vec<BigRational>,
    ) -> Result<Self, CechError> {
        if values.len() != nerve.count(degree) {
            return Err(CechError::CochainLength {
                degree,
                expected: nerve.count(degree),
                found: values.len(),
            });
        }
        if let Coefficients::Modular(0) = coefficients {
            return Err(CechError::Schema("modulus must be positive".into()));
        }
        let values = values
            .iter()
            .map(|x| normalize(coefficients, x))
            .collect::<Result<_, _>>()?;
        Ok(CechCochain {
            degree,
            coefficients,
            values,
        })
    }

    pub fn from_integers(nerve: &Nerve, degree: usize, coefficients: Coefficients, values: &[BigInt]) -> Result<Self, CechError> {
        let values = values.iter().cloned().map(BigRational::from_integer).collect();
        Self::from_values(nerve, degree, coefficients, values)
    }

    pub fn from_spec(nerve: &Nerve, spec: &CochainSpec) -> Result<Self, CechError> {
        let mut values = vec![BigRational::zero(); nerve.count(spec.degree)];
        for e in &spec.values {
            if e.simplex.len() != spec.degree + 1 {
                return Err(CechError::Schema(format!(
                    "simplex {:?} in a degree {} cochain",
                    e.simplex, spec.degree
                )));
            }
            let (sorted, sign) = sort_with_sign(&e.simplex).ok_or_else(|| CechError::UnknownSimplex(e.simplex.clone()))?;
            let i = nerve
                .index_of(&sorted)
                .ok_or_else(|| CechError::UnknownSimplex(e.simplex.clone()))?;
            values[i] += &e.value * BigInt::from(sign);
        }
        Self::from_values(nerve, spec.degree, spec.coefficients, values)
    }

    pub fn to_spec(&self, nerve: &Nerve) -> CochainSpec {
        let values = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| CochainEntry {
                simplex: nerve.simplices(self.degree)[i].clone(),
                value: v.clone(),
            })
            .collect();
        CochainSpec {
            degree: self.degree,
            coefficients: self.coefficients,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    /// Stored representatives; for angles, the lift in `[0, 1)`.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value on an arbitrary ordering of a family; zero when an index repeats.
    pub fn value_at(&self, nerve: &Nerve, tuple: &[usize]) -> Result<BigRational, CechError> {
        let Some((sorted, sign)) = sort_with_sign(tuple) else {
            return Ok(BigRational::zero());
        };
        let i = nerve
            .index_of(&sorted)
            .filter(|_| sorted.len() == self.degree + 1)
            .ok_or_else(|| CechError::UnknownSimplex(tuple.to_vec()))?;
        let v = &self.values[i] * BigInt::from(sign);
        normalize(self.coefficients, &v)
    }

    /// Integer values when every stored value is an integer.
    pub fn integer_values(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &CechCochain) -> Result<(), CechError> {
        if self.degree != other.degree || self.values.len() != other.values.len() {
            return Err(CechError::CochainLength {
                degree: other.degree,
                expected: self.values.len(),
                found: other.values.len(),
            });
        }
        if self.coefficients != other.coefficients {
            return Err(CechError::Coefficients {
                expected: self.coefficients,
                found: other.coefficients,
            });
        }
        Ok(())
    }

    fn with_values(&self, degree: usize, values: Vec<BigRational>) -> CechCochain {
        let values = values
            .iter()
            .map(|x| normalize(self.coefficients, x).expect("closed under the operation"))
            .collect();
        CechCochain {
            degree,
            coefficients: self.coefficients,
            values,
        }
    }

    pub fn add(&self, other: &CechCochain) -> Result<CechCochain, CechError> {
        self.check_compatible(other)?;
        let v = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(self.with_values(self.degree, v))
    }

    pub fn sub(&self, other: &CechCochain) -> Result<CechCochain, CechError> {
        self.check_compatible(other)?;
        let v = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(self.with_values(self.degree, v))
    }

    pub fn scale(&self, k: &BigInt) -> CechCochain {
        let k = BigRational::from_integer(k.clone());
        self.with_values(self.degree, self.values.iter().map(|v| v * &k).collect())
    }

    /// Same values read with other coefficients (e.g. an integer cochain as
    /// an angle cochain).
    pub fn reinterpret(&self, coefficients: Coefficients) -> Result<CechCochain, CechError> {
        let values = self
            .values
            .iter()
            .map(|x| normalize(coefficients, x))
            .collect::<Result<_, _>>()?;
        Ok(CechCochain {
            degree: self.degree,
            coefficients,
            values,
        })
    }

    /// `δ` applied to the stored values, then reduced.
    pub fn coboundary(&self, nerve: &Nerve) -> CechCochain {
        self.with_values(self.degree + 1, rational_matvec(&nerve.coboundary(self.degree), &self.values))
    }

    /// `δ` of the stored lift, without reduction. For an angle cochain whose
    /// coboundary vanishes mod `ℤ` this is the integer Bockstein cocycle.
    pub fn lifted_coboundary(&self, nerve: &Nerve) -> Vec<BigRational> {
        rational_matvec(&nerve.coboundary(self.degree), &self.values)
    }

    /// `Φ*` along a refinement; `self` lives on the target nerve.
    pub fn pullback(&self, map: &CoverMap) -> CechCochain {
        self.with_values(self.degree, rational_matvec(&map.pullback_matrix(self.degree), &self.values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::parse_rational;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn angle_values_wrap() {
        let n = Nerve::circle_arcs(3).unwrap();
        let a = CechCochain::from_values(&n, 0, Coefficients::Angle, vec![q("3/2"), q("-1/3"), q("1")]).unwrap();
        assert_eq!(a.values(), &[q("1/2"), q("2/3"), q("0")]);
        let sum = a.add(&a).unwrap();
        assert_eq!(sum.values(), &[q("0"), q("1/3"), q("0")]);
    }

    #[test]
    fn antisymmetric_access() {
        let n = Nerve::circle_arcs(3).unwrap();
        let spec = CochainSpec {
            degree: 1,
            coefficients: Coefficients::Rational,
            values: vec![CochainEntry {
                simplex: vec![1, 0],
                value: q("1/4"),
            }],
        };
        let c = CechCochain::from_spec(&n, &spec).unwrap();
        assert_eq!(c.value_at(&n, &[0, 1]).unwrap(), q("-1/4"));
        assert_eq!(c.value_at(&n, &[1, 0]).unwrap(), q("1/4"));
        assert_eq!(c.value_at(&n, &[1, 1]).unwrap(), q("0"));
        let back = CechCochain::from_spec(&n, &c.to_spec(&n)).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn coboundary_squares_to_zero_for_every_coefficient() {
        let n = Nerve::simplex_boundary(5);
        let raw = vec![q("1/3"), q("-5/7"), q("2"), q("1/2"), q("9/4"), q("-1")];
        let mut raw = raw.into_iter().cycle();
        for c in [Coefficients::Rational, Coefficients::Angle] {
            let vals = (0..n.count(1)).map(|_| raw.next().unwrap()).collect();
            let x = CechCochain::from_values(&n, 1, c, vals).unwrap();
            assert!(x.coboundary(&n).coboundary(&n).is_zero());
        }
        for c in [Coefficients::Integer, Coefficients::Modular(4)] {
            let vals: Vec<BigInt> = (0..n.count(1)).map(|i| BigInt::from(i as i64 * 3 - 7)).collect();
            let x = CechCochain::from_integers(&n, 1, c, &vals).unwrap();
            assert!(x.coboundary(&n).coboundary(&n).is_zero());
        }
    }

    #[test]
    fn integer_coefficients_reject_fractions() {
        let n = Nerve::full_simplex(2);
        assert!(CechCochain::from_values(&n, 0, Coefficients::Integer, vec![q("1/2"), q("0")]).is_err());
    }
}
