//! Rational vectors and their `"p/q"` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::IntegerMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot read {0:?} as a rational number")]
pub struct ParseRationalError(pub String);

/// Accepts `"3"`, `"-3/4"`, `" 1 / 2 "`. Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        None => BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Comma- or whitespace-separated list, optionally in parentheses.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>, ParseRationalError> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(parse_rational)
        .collect()
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_rational_list(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn rational_matvec(m: &IntegerMatrix, v: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(m.cols(), v.len(), "matrix/vector shape mismatch");
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigRational::zero(), |acc, (a, b)| acc + b * a)
        })
        .collect()
}

pub fn rational_dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// `Σ aᵢ·bᵢ` for rational `a` against integer `b`.
pub fn rational_int_dot(a: &[BigRational], b: &[BigInt]) -> BigRational {
    assert_eq!(a.len(), b.len(), "pairing of vectors with different lengths");
    a.iter()
        .zip(b)
        .filter(|(_, y)| !y.is_zero())
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Least common multiple of the denominators (1 for an empty list).
pub fn denominator_lcm<'a>(v: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    v.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Serde adapter: a rational as `"p/q"`, accepting bare integers on input.
pub mod json_rat {
    use num_rational::BigRational;
    use serde::de::{self, Deserializer};
    use serde::{Deserialize, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub enum Raw {
        Int(i64),
        Text(String),
    }

    impl Raw {
        pub fn into_rational<E: de::Error>(self) -> Result<BigRational, E> {
            match self {
                Raw::Int(i) => Ok(BigRational::from_integer(i.into())),
                Raw::Text(s) => super::parse_rational(&s).map_err(E::custom),
            }
        }
    }

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        Raw::deserialize(d)?.into_rational()
    }
}

/// Serde adapter for `Vec<BigRational>`.
pub mod json_rat_vec {
    use num_rational::BigRational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::json_rat::Raw;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&super::format_rational(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<Raw>::deserialize(d)?
            .into_iter()
            .map(Raw::into_rational)
            .collect()
    }
}
