use std::collections::{BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{rat, scale, Family, LieError};
use crate::algebra::rational::rational_dot;
use crate::algebra::rational_matrix_solve;

/// A simple root system in its standard Euclidean model (Bourbaki numbering).
///
/// The inner product is `scale · (x · y)` on the ambient space. `A_d` and
/// `G₂` live in the sum-zero hyperplane of `ℝ^{d+1}` and `ℝ³`, `E₆` and `E₇`
/// in the span of their simple roots inside `ℝ⁸`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    scale: BigRational,
    simple: Vec<Vec<BigRational>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    marks: Vec<i64>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

fn halves(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x, 2)).collect()
}

fn e8_simple() -> Vec<Vec<BigRational>> {
    let mut s = vec![halves(&[1, -1, -1, -1, -1, -1, -1, 1])];
    s.push(ints(&[1, 1, 0, 0, 0, 0, 0, 0]));
    for i in 0..6 {
        s.push(ints(&diff(8, i + 1, i)));
    }
    s
}

fn simple_roots(family: Family, d: usize) -> Option<(BigRational, Vec<Vec<BigRational>>)> {
    let one = BigRational::one();
    let chain = |n: usize, len: usize| -> Vec<Vec<BigRational>> { (0..len).map(|i| ints(&diff(n, i, i + 1))).collect() };
    Some(match (family, d) {
        (Family::A, d) if d >= 1 => (one, chain(d + 1, d)),
        (Family::B, d) if d >= 2 => {
            let mut s = chain(d, d - 1);
            s.push(ints(&unit(d, d - 1)));
            (one, s)
        }
        (Family::C, d) if d >= 2 => {
            let mut s = chain(d, d - 1);
            s.push(ints(&unit(d, d - 1).iter().map(|x| 2 * x).collect::<Vec<_>>()));
            (rat(1, 2), s)
        }
        (Family::D, d) if d >= 4 => {
            let mut s = chain(d, d - 1);
            let mut last = vec![0; d];
            last[d - 2] = 1;
            last[d - 1] = 1;
            s.push(ints(&last));
            (one, s)
        }
        (Family::E, d @ 6..=8) => (one, e8_simple().into_iter().take(d).collect()),
        (Family::F, 4) => (
            one,
            vec![
                ints(&[0, 1, -1, 0]),
                ints(&[0, 0, 1, -1]),
                ints(&[0, 0, 0, 1]),
                halves(&[1, -1, -1, -1]),
            ],
        ),
        (Family::G, 2) => (rat(1, 3), vec![ints(&[1, -1, 0]), ints(&[-2, 1, 1])]),
        _ => return None,
    })
}

/// All roots in simple-root coordinates: the Weyl orbit of the simple roots.
fn enumerate_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..d).map(|i| unit(d, i)).collect();
    while let Some(beta) = queue.pop_front() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..d {
            let pairing: i64 = (0..d).map(|k| beta[k] * cartan[k][i]).sum();
            if pairing != 0 {
                let mut r = beta.clone();
                r[i] -= pairing;
                if !seen.contains(&r) {
                    queue.push_back(r);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Builds the root system of type `family` and rank `rank`.
pub fn root_system(family: Family, rank: usize) -> Result<RootSystem, LieError> {
    let (scale, simple) = simple_roots(family, rank).ok_or(LieError::InvalidRank { family, rank })?;
    let d = simple.len();
    let ip = |a: &[BigRational], b: &[BigRational]| &scale * rational_dot(a, b);
    let mut cartan = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let a = rat(2, 1) * ip(&simple[i], &simple[j]) / ip(&simple[j], &simple[j]);
            if !a.is_integer() {
                return Err(LieError::Inconsistent("non-integral Cartan entry"));
            }
            cartan[i][j] = i64::try_from(a.to_integer()).map_err(|_| LieError::Inconsistent("Cartan entry"))?;
        }
    }
    if simple.iter().map(|a| ip(a, a)).max() != Some(rat(2, 1)) {
        return Err(LieError::Inconsistent("long roots must have square length 2"));
    }
    let roots = enumerate_roots(&cartan);
    let height = |r: &Vec<i64>| r.iter().sum::<i64>();
    let top = roots.iter().map(height).max().expect("nonempty");
    let highest: Vec<&Vec<i64>> = roots.iter().filter(|r| height(r) == top).collect();
    if highest.len() != 1 || highest[0].iter().any(|&m| m <= 0) {
        return Err(LieError::Inconsistent("highest root"));
    }
    let marks = highest[0].clone();
    Ok(RootSystem {
        family,
        rank,
        scale,
        simple,
        cartan,
        roots,
        marks,
    })
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn ambient_dim(&self) -> usize {
        self.simple[0].len()
    }

    /// The basic inner product on the ambient coordinates.
    pub fn inner(&self, a: &[BigRational], b: &[BigRational]) -> BigRational {
        &self.scale * rational_dot(a, b)
    }

    /// Gram matrix of the basic inner product in ambient coordinates.
    pub fn gram(&self) -> Vec<Vec<BigRational>> {
        let n = self.ambient_dim();
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.scale.clone() } else { BigRational::zero() }).collect())
            .collect()
    }

    pub fn simple_roots(&self) -> &[Vec<BigRational>] {
        &self.simple
    }

    /// `α^∨ = 2α/(α·α)`, as a vector of `𝔱`.
    pub fn coroot(&self, alpha: &[BigRational]) -> Vec<BigRational> {
        scale(&(rat(2, 1) / self.inner(alpha, alpha)), alpha)
    }

    pub fn simple_coroots(&self) -> Vec<Vec<BigRational>> {
        self.simple.iter().map(|a| self.coroot(a)).collect()
    }

    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots, in simple-root coordinates.
    pub fn roots_in_simple_coordinates(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// Coefficients of the highest root in the simple roots.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn combine(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.ambient_dim()];
        for (c, a) in coeffs.iter().zip(&self.simple) {
            for (x, y) in v.iter_mut().zip(a) {
                *x += c * y;
            }
        }
        v
    }

    pub fn highest_root(&self) -> Vec<BigRational> {
        let m: Vec<BigRational> = self.marks.iter().map(|&m| rat(m, 1)).collect();
        self.combine(&m)
    }

    /// `α₀`, the negative of the highest root.
    pub fn lowest_root(&self) -> Vec<BigRational> {
        self.highest_root().iter().map(|x| -x).collect()
    }

    /// Coordinates of `v` in the simple roots, or `None` if `v ∉ 𝔱`.
    pub fn simple_coordinates(&self, v: &[BigRational]) -> Result<Option<Vec<BigRational>>, LieError> {
        if v.len() != self.ambient_dim() {
            return Err(LieError::Length {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        let d = self.rank;
        let rows: Vec<Vec<BigRational>> = (0..v.len()).map(|r| (0..d).map(|c| self.simple[c][r].clone()).collect()).collect();
        Ok(rational_matrix_solve(&rows, d, v)?)
    }

    /// The vector `ξ ∈ 𝔱` with `⟨α_i, ξ⟩ = rhs_i` for every simple root.
    pub(crate) fn dual_vector(&self, rhs: &[BigRational]) -> Vec<BigRational> {
        let d = self.rank;
        let rows: Vec<Vec<BigRational>> = (0..d)
            .map(|i| (0..d).map(|k| self.inner(&self.simple[i], &self.simple[k])).collect())
            .collect();
        let c = rational_matrix_solve(&rows, d, rhs)
            .expect("square system")
            .expect("simple roots are a basis");
        self.combine(&c)
    }

    /// The fundamental coweights: `⟨α_i, ω_j^∨⟩ = δ_ij`.
    pub fn fundamental_coweights(&self) -> Vec<Vec<BigRational>> {
        (0..self.rank)
            .map(|j| {
                let rhs: Vec<BigRational> = (0..self.rank).map(|i| rat((i == j) as i64, 1)).collect();
                self.dual_vector(&rhs)
            })
            .collect()
    }

    /// The fundamental weights, seen in `𝔱`: `⟨ω_j, α_i^∨⟩ = δ_ij`.
    pub fn fundamental_weights(&self) -> Vec<Vec<BigRational>> {
        (0..self.rank)
            .map(|j| {
                let rhs: Vec<BigRational> = (0..self.rank)
                    .map(|i| {
                        if i == j {
                            self.inner(&self.simple[i], &self.simple[i]) / rat(2, 1)
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect();
                self.dual_vector(&rhs)
            })
            .collect()
    }

    pub(crate) fn reflect(&self, v: &[BigRational], alpha: &[BigRational], shift: &BigRational) -> Vec<BigRational> {
        let t = self.inner(v, alpha) - shift;
        let c = self.coroot(alpha);
        v.iter().zip(&c).map(|(x, y)| x - &t * y).collect()
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}
