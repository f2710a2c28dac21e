//! SU(n) in sum-zero coordinates: eigenphase normalization, the vertices
//! `μ_i`, the eigenline weights `ν_i`, and the cover `𝔄_1, …, 𝔄_n`.
//!
//! Cover indices run over `1..=n`; index `n` belongs to the vertex
//! `μ_n = μ_0 = 0`, so [`alcove_membership`](super::alcove_membership) index
//! `0` corresponds to `n` here.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{rat, sub, LieError};

fn check_n(n: usize) -> Result<(), LieError> {
    if n < 2 {
        return Err(LieError::Phases(format!("SU(n) needs n ≥ 2, got {n}")));
    }
    Ok(())
}

/// `ν_k = e_k − (1/n)(1, …, 1)` for `1 ≤ k ≤ n`.
pub fn nu(n: usize, k: usize) -> Vec<BigRational> {
    assert!((1..=n).contains(&k));
    (1..=n).map(|i| rat((i == k) as i64, 1) - rat(1, n as i64)).collect()
}

/// `μ_i = Σ_{k≤i} e_k − (i/n)(1, …, 1)` for `0 ≤ i ≤ n`.
pub fn mu(n: usize, i: usize) -> Vec<BigRational> {
    assert!(i <= n);
    (1..=n).map(|c| rat((c <= i) as i64, 1) - rat(i as i64, n as i64)).collect()
}

/// The weight of the line bundle on the overlap of cover sets `i < j`,
/// computed as `μ_j − μ_i` and as `Σ_{i<k≤j} ν_k`; the two must agree.
pub fn sun_gerbe_weight(n: usize, i: usize, j: usize) -> Result<Vec<BigRational>, LieError> {
    check_n(n)?;
    if !(1 <= i && i < j && j <= n) {
        return Err(LieError::Index { n, i, j });
    }
    let by_vertices = sub(&mu(n, j), &mu(n, i));
    let mut by_lines = vec![BigRational::zero(); n];
    for k in i + 1..=j {
        by_lines = super::add(&by_lines, &nu(n, k));
    }
    if by_vertices != by_lines {
        return Err(LieError::Inconsistent("μ_j − μ_i differs from Σν_k"));
    }
    Ok(by_vertices)
}

/// The alcove point `λ` of a diagonal matrix with the given eigenphases
/// (rationals mod 1): `Σλ_i = 0` and `λ_1 ≥ … ≥ λ_n ≥ λ_1 − 1`.
///
/// Reduced phases `p_1 ≥ … ≥ p_n` in `[0, 1)` sum to an integer `s`; the
/// answer is `(p_{s+1}, …, p_n, p_1 − 1, …, p_s − 1)`.
pub fn sun_normalize_eigenphases(phases: &[BigRational]) -> Result<Vec<BigRational>, LieError> {
    check_n(phases.len())?;
    let mut p: Vec<BigRational> = phases.iter().map(|x| x - x.floor()).collect();
    p.sort_by(|a, b| b.cmp(a));
    let total: BigRational = p.iter().sum();
    if !total.is_integer() {
        return Err(LieError::Phases(format!("phases sum to {total}, not an integer")));
    }
    let s = usize::try_from(total.to_integer()).expect("sum of n values in [0, 1)");
    let one = rat(1, 1);
    let mut lambda: Vec<BigRational> = p[s..].to_vec();
    lambda.extend(p[..s].iter().map(|x| x - &one));
    debug_assert!(lambda.iter().sum::<BigRational>().is_zero());
    debug_assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
    debug_assert!(lambda[lambda.len() - 1] >= &lambda[0] - &one);
    Ok(lambda)
}

/// `{i : λ ∈ 𝔄_i}` with `𝔄_i = {λ_i > λ_{i+1}}` for `i < n` and
/// `𝔄_n = {λ_n > λ_1 − 1}`.
pub fn sun_cover_membership(lambda: &[BigRational]) -> Result<Vec<usize>, LieError> {
    let n = lambda.len();
    check_n(n)?;
    let one = rat(1, 1);
    let gaps: Vec<BigRational> = (0..n)
        .map(|i| {
            if i + 1 < n {
                &lambda[i] - &lambda[i + 1]
            } else {
                &lambda[n - 1] - (&lambda[0] - &one)
            }
        })
        .collect();
    if !lambda.iter().sum::<BigRational>().is_zero() || gaps.iter().any(Signed::is_negative) {
        return Err(LieError::OutsideAlcove);
    }
    Ok((1..=n).filter(|&i| gaps[i - 1].is_positive()).collect())
}

#[cfg(test)]
mod tests {
    use super::super::{alcove_membership, root_system, Alcove, Family};
    use super::*;
    use crate::algebra::rational::parse_rational_list;

    fn v(s: &str) -> Vec<BigRational> {
        parse_rational_list(s).unwrap()
    }

    #[test]
    fn vertices_are_partial_sums_of_line_weights() {
        for n in 2..=8 {
            for i in 1..n {
                let mut sum = vec![BigRational::zero(); n];
                for k in 1..=i {
                    sum = super::super::add(&sum, &nu(n, k));
                }
                assert_eq!(mu(n, i), sum);
            }
            assert!(mu(n, n).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn vertices_match_the_root_system() {
        for n in 2..=8 {
            let rs = root_system(Family::A, n - 1).unwrap();
            let alcove = Alcove::new(&rs);
            for i in 0..n {
                assert_eq!(alcove.vertices[i], mu(n, i));
            }
        }
    }

    #[test]
    fn gerbe_weights() {
        assert_eq!(sun_gerbe_weight(3, 1, 2).unwrap(), v("-1/3,2/3,-1/3"));
        assert_eq!(sun_gerbe_weight(2, 1, 2).unwrap(), v("-1/2,1/2"));
        for n in 2..=6 {
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        let ij = sun_gerbe_weight(n, i, j).unwrap();
                        let jk = sun_gerbe_weight(n, j, k).unwrap();
                        assert_eq!(super::super::add(&ij, &jk), sun_gerbe_weight(n, i, k).unwrap());
                    }
                }
            }
        }
        assert!(sun_gerbe_weight(3, 2, 2).is_err());
        assert!(sun_gerbe_weight(3, 0, 2).is_err());
        assert!(sun_gerbe_weight(3, 1, 4).is_err());
    }

    #[test]
    fn eigenphase_examples() {
        assert_eq!(sun_normalize_eigenphases(&v("1/4,3/4")).unwrap(), v("1/4,-1/4"));
        assert_eq!(sun_normalize_eigenphases(&v("1/3,1/3,1/3")).unwrap(), v("1/3,1/3,-2/3"));
        assert_eq!(sun_normalize_eigenphases(&v("0,0")).unwrap(), v("0,0"));
        assert!(sun_normalize_eigenphases(&v("1/4,1/4")).is_err());
        assert!(sun_normalize_eigenphases(&v("0")).is_err());
    }

    #[test]
    fn normalization_is_idempotent_and_symmetric() {
        let samples = ["1/5,2/5,3/5,4/5", "7/3,-1/3,0", "1/2,1/2,1/2,1/2", "-3/7,1/7,2/7", "0,0,0,0,0"];
        for s in samples {
            let phases = v(s);
            let lambda = sun_normalize_eigenphases(&phases).unwrap();
            assert_eq!(sun_normalize_eigenphases(&lambda).unwrap(), lambda);
            let mut reversed = phases.clone();
            reversed.reverse();
            assert_eq!(sun_normalize_eigenphases(&reversed).unwrap(), lambda);
            let mut rotated = phases.clone();
            rotated.rotate_left(1);
            assert_eq!(sun_normalize_eigenphases(&rotated).unwrap(), lambda);
            let rs = root_system(Family::A, phases.len() - 1).unwrap();
            assert!(Alcove::contains(&rs, &lambda));
        }
    }

    #[test]
    fn cover_membership_agrees_with_alcove_walls() {
        let samples = ["1/3,0,-1/3", "1/2,0,-1/2", "2/3,-1/3,-1/3", "0,0,0", "1/3,1/3,-2/3", "1/4,1/4,-1/4,-1/4"];
        for s in samples {
            let lambda = v(s);
            let n = lambda.len();
            let rs = root_system(Family::A, n - 1).unwrap();
            let general: Vec<usize> = alcove_membership(&rs, &lambda)
                .unwrap()
                .into_iter()
                .map(|j| if j == 0 { n } else { j })
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(sun_cover_membership(&lambda).unwrap(), general, "{s}");
        }
        assert_eq!(sun_cover_membership(&v("0,0,0")).unwrap(), vec![3]);
        assert!(sun_cover_membership(&v("1,0,-1")).is_err());
    }
}
