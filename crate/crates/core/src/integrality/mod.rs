//! Kronecker pairing between relative cochains and relative cycles of a
//! simplicial map `Φ : M → N`, and the integrality tests built on it.
//!
//! A relative `n`-cochain is `(α, β)` with `α` an `(n−1)`-cochain on `M` and
//! `β` an `n`-cochain on `N`; it is closed when `dβ = 0` and `dα = Φ*β`. A
//! relative `n`-cycle is `(θ, η)` with `θ` an `(n−1)`-chain on `M`, `η` an
//! `n`-chain on `N`, `∂θ = 0` and `Φ_*θ = ∂η`. The pairing is
//! `⟨(α,β),(θ,η)⟩ = ⟨α,θ⟩ − ⟨β,η⟩`, slots matched by degree.

pub mod models;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::matrix::json_int_vec;
use crate::algebra::rational::{denominator_lcm, json_rat, json_rat_vec, rational_int_dot, rational_matvec};
use crate::algebra::{AbelianGroupPresentation, AlgebraError};
use crate::chain::{mapping_cone, ChainError, ConeComplex};
use crate::simplicial::{DeltaComplex, SimplicialError, SimplicialMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntegralityError {
    #[error("{what} has {found} entries, expected {expected}")]
    Length {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("relative degree must be at least 1")]
    Degree,
    #[error("cochain pair is not closed: {0}")]
    NotClosed(&'static str),
    #[error("chain pair is not a relative cycle: {0}")]
    NotACycle(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("level must be at least 1, got {0}")]
    Level(i64),
    #[error("{0}")]
    Inconsistent(&'static str),
    #[error("{0}")]
    Simplicial(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<SimplicialError> for IntegralityError {
    fn from(e: SimplicialError) -> Self {
        match e {
            SimplicialError::Chain(c) => IntegralityError::Chain(c),
            other => IntegralityError::Simplicial(other.to_string()),
        }
    }
}

fn check_len<T>(what: &'static str, v: &[T], expected: usize) -> Result<(), IntegralityError> {
    if v.len() != expected {
        return Err(IntegralityError::Length {
            what,
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

/// `dc` for an `n`-cochain on `k`.
pub fn coboundary(k: &DeltaComplex, n: usize, c: &[BigRational]) -> Vec<BigRational> {
    let d = k.chain_complex().out_of(n as i64 + 1);
    rational_matvec(&d.transpose(), c)
}

/// `Φ*c` for an `n`-cochain on the target.
pub fn pullback(map: &SimplicialMap, n: usize, c: &[BigRational]) -> Vec<BigRational> {
    rational_matvec(&map.chain_map().component(n as i64).transpose(), c)
}

fn zeros(len: usize) -> Vec<BigRational> {
    vec![BigRational::zero(); len]
}

/// `(α, β)` in relative degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeCochainPair {
    #[serde(skip)]
    map: SimplicialMap,
    pub degree: usize,
    /// `α`, an `(n−1)`-cochain on the source.
    #[serde(with = "json_rat_vec")]
    pub source: Vec<BigRational>,
    /// `β`, an `n`-cochain on the target.
    #[serde(with = "json_rat_vec")]
    pub target: Vec<BigRational>,
}

impl RelativeCochainPair {
    /// Checks lengths only; see [`RelativeCochainPair::check_closed`].
    pub fn new(
        map: SimplicialMap,
        degree: usize,
        source: Vec<BigRational>,
        target: Vec<BigRational>,
    ) -> Result<Self, IntegralityError> {
        if degree == 0 {
            return Err(IntegralityError::Degree);
        }
        check_len("source cochain", &source, map.source().count(degree - 1))?;
        check_len("target cochain", &target, map.target().count(degree))?;
        Ok(RelativeCochainPair {
            map,
            degree,
            source,
            target,
        })
    }

    pub fn zero(map: SimplicialMap, degree: usize) -> Result<Self, IntegralityError> {
        let (a, b) = (map.source().count(degree.saturating_sub(1)), map.target().count(degree));
        Self::new(map, degree, zeros(a), zeros(b))
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    /// `dβ = 0` and `dα = Φ*β`.
    pub fn check_closed(&self) -> Result<(), IntegralityError> {
        let n = self.degree;
        if coboundary(self.map.target(), n, &self.target).iter().any(|x| !x.is_zero()) {
            return Err(IntegralityError::NotClosed("dβ ≠ 0 on the target"));
        }
        if coboundary(self.map.source(), n - 1, &self.source) != pullback(&self.map, n, &self.target) {
            return Err(IntegralityError::NotClosed("dα ≠ Φ*β on the source"));
        }
        Ok(())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        RelativeCochainPair {
            map: self.map.clone(),
            degree: self.degree,
            source: self.source.iter().map(|x| x * k).collect(),
            target: self.target.iter().map(|x| x * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, IntegralityError> {
        if self.degree != other.degree || self.map != other.map {
            return Err(IntegralityError::Precondition("pairs live on different maps or degrees"));
        }
        Ok(RelativeCochainPair {
            map: self.map.clone(),
            degree: self.degree,
            source: self.source.iter().zip(&other.source).map(|(x, y)| x + y).collect(),
            target: self.target.iter().zip(&other.target).map(|(x, y)| x + y).collect(),
        })
    }

    /// `(α, β) + d(γ, ε) = (α + Φ*ε − dγ, β + dε)` for an `(n−2)`-cochain
    /// `γ` on the source (empty when `n = 1`) and an `(n−1)`-cochain `ε` on
    /// the target.
    pub fn shifted_by_coboundary(&self, gamma: &[BigRational], epsilon: &[BigRational]) -> Result<Self, IntegralityError> {
        let n = self.degree;
        check_len("target primitive", epsilon, self.map.target().count(n - 1))?;
        let dgamma = if n >= 2 {
            check_len("source primitive", gamma, self.map.source().count(n - 2))?;
            coboundary(self.map.source(), n - 2, gamma)
        } else {
            check_len("source primitive", gamma, 0)?;
            zeros(self.source.len())
        };
        let pulled = pullback(&self.map, n - 1, epsilon);
        let source = self
            .source
            .iter()
            .zip(pulled.iter().zip(&dgamma))
            .map(|(a, (p, g))| a + p - g)
            .collect();
        let de = coboundary(self.map.target(), n - 1, epsilon);
        let target = self.target.iter().zip(&de).map(|(b, e)| b + e).collect();
        Ok(RelativeCochainPair {
            map: self.map.clone(),
            degree: n,
            source,
            target,
        })
    }
}

/// `(θ, η)` in relative degree `n` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeCycle {
    pub degree: usize,
    #[serde(with = "json_int_vec")]
    pub theta: Vec<BigInt>,
    #[serde(with = "json_int_vec")]
    pub eta: Vec<BigInt>,
}

impl RelativeCycle {
    /// Checks `∂θ = 0` and `Φ_*θ = ∂η`.
    pub fn new(map: &SimplicialMap, degree: usize, theta: Vec<BigInt>, eta: Vec<BigInt>) -> Result<Self, IntegralityError> {
        if degree == 0 {
            return Err(IntegralityError::Degree);
        }
        let n = degree as i64;
        check_len("θ", &theta, map.source().count(degree - 1))?;
        check_len("η", &eta, map.target().count(degree))?;
        let m = map.source().chain_complex();
        if m.out_of(n - 1).mul_vec(&theta)?.iter().any(|x| !x.is_zero()) {
            return Err(IntegralityError::NotACycle("∂θ ≠ 0"));
        }
        let pushed = map.chain_map().apply(n - 1, &theta);
        if pushed != map.target().chain_complex().out_of(n).mul_vec(&eta)? {
            return Err(IntegralityError::NotACycle("Φ_*θ ≠ ∂η"));
        }
        Ok(RelativeCycle { degree, theta, eta })
    }

    fn from_cone(cone: &ConeComplex, n: usize, v: &[BigInt]) -> Self {
        let (theta, eta) = cone.parts(n as i64, v);
        RelativeCycle {
            degree: n,
            theta: theta.to_vec(),
            eta: eta.to_vec(),
        }
    }
}

/// `⟨α,θ⟩ − ⟨β,η⟩`.
pub fn kronecker_pair(c: &RelativeCochainPair, z: &RelativeCycle) -> Result<BigRational, IntegralityError> {
    if c.degree != z.degree {
        return Err(IntegralityError::Precondition("cochain and cycle have different degrees"));
    }
    check_len("θ", &z.theta, c.source.len())?;
    check_len("η", &z.eta, c.target.len())?;
    Ok(rational_int_dot(&c.source, &z.theta) - rational_int_dot(&c.target, &z.eta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Free,
    Torsion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorPairing {
    pub kind: GeneratorKind,
    pub cycle: RelativeCycle,
    #[serde(with = "json_rat")]
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub degree: usize,
    pub integral: bool,
    /// `H_n(Φ; ℤ)`.
    pub homology: AbelianGroupPresentation,
    /// Pairings with the free generators, then the torsion generators.
    pub generators: Vec<GeneratorPairing>,
    /// First free generator with a non-integral pairing.
    pub violating: Option<GeneratorPairing>,
    /// Smallest `k ≥ 1` with `k·c` integral: the lcm of the pairing denominators.
    #[serde(with = "crate::algebra::matrix::json_int")]
    pub minimal_multiplier: BigInt,
}

/// Decides whether the class of a closed relative cochain is integral by
/// pairing it with generators of `H_n(Φ; ℤ)`. Torsion generators pair to
/// zero. The verdict is cross-checked against a basis of all relative
/// cycles.
pub fn is_integral(c: &RelativeCochainPair) -> Result<IntegralityReport, IntegralityError> {
    c.check_closed()?;
    let n = c.degree;
    let cone = mapping_cone(&c.map.chain_map())?;
    let h = cone.complex().homology_group(n as i64);
    let cochain = cone.join(n as i64, &c.source, &c.target);
    let mut generators = Vec::new();
    for (kind, reps) in [
        (GeneratorKind::Free, h.quotient.free_generators()),
        (GeneratorKind::Torsion, h.quotient.torsion_generators()),
    ] {
        for v in reps {
            let value = cone.pair(n as i64, &cochain, &v)?;
            if kind == GeneratorKind::Torsion && !value.is_zero() {
                return Err(IntegralityError::Inconsistent("a torsion class pairs nontrivially"));
            }
            generators.push(GeneratorPairing {
                kind,
                cycle: RelativeCycle::from_cone(&cone, n, &v),
                value,
            });
        }
    }
    let violating = generators.iter().find(|g| !g.value.is_integer()).cloned();
    let minimal_multiplier = denominator_lcm(generators.iter().map(|g| &g.value));

    let cycles = cone.complex().cycles(n as i64);
    let basis_values: Vec<BigRational> = (0..cycles.rank())
        .map(|j| cone.pair(n as i64, &cochain, &cycles.basis_vector(j)))
        .collect::<Result<_, _>>()?;
    if denominator_lcm(&basis_values) != minimal_multiplier {
        return Err(IntegralityError::Inconsistent(
            "generator pairings and cycle-basis pairings disagree",
        ));
    }
    Ok(IntegralityReport {
        degree: n,
        integral: violating.is_none(),
        homology: h.group().clone(),
        generators,
        violating,
        minimal_multiplier,
    })
}

/// Integrality of `(0, ω)` in relative degree 2 for a closed 2-cochain `ω`
/// on the target with `Φ*ω = 0`.
pub fn bohr_sommerfeld_check(map: &SimplicialMap, omega: &[BigRational]) -> Result<IntegralityReport, IntegralityError> {
    check_len("ω", omega, map.target().count(2))?;
    if coboundary(map.target(), 2, omega).iter().any(|x| !x.is_zero()) {
        return Err(IntegralityError::Precondition("dω ≠ 0"));
    }
    if pullback(map, 2, omega).iter().any(|x| !x.is_zero()) {
        return Err(IntegralityError::Precondition("Φ*ω ≠ 0"));
    }
    let pair = RelativeCochainPair::new(map.clone(), 2, zeros(map.source().count(1)), omega.to_vec())?;
    is_integral(&pair)
}

/// Verdict of the sufficient condition "`H₂(M; ℤ)` is `r`-torsion and `r | k`".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Shortcut {
    /// `r·H₂(M) = 0`, `r | k` and `η` is integral, so a pre-quantization exists.
    Applies {
        #[serde(with = "crate::algebra::matrix::json_int")]
        r: BigInt,
    },
    NotApplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrequantReport {
    pub level: i64,
    /// `H₂(M; ℤ)`.
    pub source_h2: AbelianGroupPresentation,
    pub eta_integral: bool,
    pub shortcut: Shortcut,
    pub direct: IntegralityReport,
    pub prequantizable: bool,
}

/// `⟨η, z⟩ ∈ ℤ` for every integral 3-cycle `z` of the target.
fn eta_is_integral(target: &DeltaComplex, eta: &[BigRational]) -> Result<bool, IntegralityError> {
    let cycles = target.chain_complex().cycles(3);
    for j in 0..cycles.rank() {
        if !rational_int_dot(eta, &cycles.basis_vector(j)).is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integrality of `k·(ω, η)` in relative degree 3, for a 2-cochain `ω` on the
/// source and a closed 3-cochain `η` on the target with `dω = Ψ*η`, together
/// with the torsion shortcut. The two verdicts are required to agree
/// whenever the shortcut applies.
pub fn prequantization_check(
    map: &SimplicialMap,
    omega: &[BigRational],
    eta: &[BigRational],
    level: i64,
) -> Result<PrequantReport, IntegralityError> {
    if level < 1 {
        return Err(IntegralityError::Level(level));
    }
    let pair = RelativeCochainPair::new(map.clone(), 3, omega.to_vec(), eta.to_vec())?;
    pair.check_closed()?;
    let k = BigRational::from_integer(BigInt::from(level));
    let direct = is_integral(&pair.scale(&k))?;
    let source_h2 = map.source().chain_complex().homology_group(2).group().clone();
    let eta_integral = eta_is_integral(map.target(), eta)?;
    let shortcut = if source_h2.free_rank > 0 {
        Shortcut::NotApplicable {
            reason: "H₂(M) has a free part".into(),
        }
    } else if !eta_integral {
        Shortcut::NotApplicable {
            reason: "η is not integral".into(),
        }
    } else {
        let r = source_h2.torsion_exponent();
        if (BigInt::from(level) % &r).is_zero() {
            Shortcut::Applies { r }
        } else {
            Shortcut::NotApplicable {
                reason: format!("level {level} is not a multiple of {r}"),
            }
        }
    };
    if matches!(shortcut, Shortcut::Applies { .. }) && !direct.integral {
        return Err(IntegralityError::Inconsistent("torsion shortcut and direct pairing disagree"));
    }
    Ok(PrequantReport {
        level,
        source_h2,
        eta_integral,
        prequantizable: direct.integral,
        shortcut,
        direct,
    })
}

/// Smallest `k ≥ 1` with `k·c` integral, found by trying `k = 1, 2, …` up to
/// `limit` with the full integrality test.
pub fn brute_force_multiplier(c: &RelativeCochainPair, limit: u64) -> Result<Option<BigInt>, IntegralityError> {
    for k in 1..=limit {
        let kq = BigRational::from_integer(BigInt::from(k));
        if is_integral(&c.scale(&kq))?.integral {
            return Ok(Some(BigInt::from(k)));
        }
    }
    Ok(None)
}
