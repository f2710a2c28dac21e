//! Linear systems `A·x = b`, over ℤ through the Smith form and over ℚ by
//! plain Gauss–Jordan elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{smith_normal_form, AlgebraError, IntegerMatrix};

fn check_rhs(a: &IntegerMatrix, len: usize, op: &'static str) -> Result<(), AlgebraError> {
    if a.rows() != len {
        return Err(AlgebraError::Shape {
            op,
            left: a.shape(),
            right: (len, 1),
        });
    }
    Ok(())
}

/// Some integer `x` with `a·x = b`, or `None` if there is none.
pub fn integer_solve(a: &IntegerMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, AlgebraError> {
    check_rhs(a, b.len(), "integer_solve")?;
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b)?;
    if c[s.rank..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..s.rank {
        let (q, r) = c[i].div_rem(&s.d[(i, i)]);
        if !r.is_zero() {
            return Ok(None);
        }
        y[i] = q;
    }
    let x = s.v.mul_vec(&y)?;
    debug_assert_eq!(a.mul_vec(&x)?, b);
    Ok(Some(x))
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let k = m[i][c].clone();
            for j in 0..m[i].len() {
                if m[r][j].is_zero() {
                    continue;
                }
                let t = &k * &m[r][j];
                m[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

fn rational_rows(a: &IntegerMatrix) -> Vec<Vec<BigRational>> {
    (0..a.rows()).map(|i| to_rational(a.row(i))).collect()
}

/// Rank over ℚ.
pub fn rational_rank(a: &IntegerMatrix) -> usize {
    let mut m = rational_rows(a);
    rref(&mut m, a.cols()).len()
}

/// A rational `x` with `a·x = b` (free variables set to zero), or `None`.
pub fn rational_solve(
    a: &IntegerMatrix,
    b: &[BigRational],
) -> Result<Option<Vec<BigRational>>, AlgebraError> {
    check_rhs(a, b.len(), "rational_solve")?;
    Ok(solve_rows(rational_rows(a), a.cols(), b))
}

/// As [`rational_solve`], for a matrix with rational entries given by rows.
pub fn rational_matrix_solve(
    rows: &[Vec<BigRational>],
    cols: usize,
    b: &[BigRational],
) -> Result<Option<Vec<BigRational>>, AlgebraError> {
    if rows.len() != b.len() || rows.iter().any(|r| r.len() != cols) {
        return Err(AlgebraError::Shape {
            op: "rational_matrix_solve",
            left: (rows.len(), cols),
            right: (b.len(), 1),
        });
    }
    Ok(solve_rows(rows.to_vec(), cols, b))
}

fn solve_rows(mut m: Vec<Vec<BigRational>>, n: usize, b: &[BigRational]) -> Option<Vec<BigRational>> {
    for (row, bi) in m.iter_mut().zip(b) {
        row.push(bi.clone());
    }
    let pivots = rref(&mut m, n);
    if m[pivots.len()..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        debug_assert!(m[r][c].is_one());
        x[c] = m[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_integer_systems() {
        let a = IntegerMatrix::from_rows(&[[2]]);
        assert_eq!(integer_solve(&a, &ints(&[4])).unwrap(), Some(ints(&[2])));
        assert_eq!(integer_solve(&a, &ints(&[3])).unwrap(), None);
        let d = IntegerMatrix::from_rows(&[[1, 0], [0, 6]]);
        assert_eq!(integer_solve(&d, &ints(&[5, 12])).unwrap(), Some(ints(&[5, 2])));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = IntegerMatrix::from_rows(&[[1, 2]]);
        assert!(integer_solve(&a, &ints(&[1, 2])).is_err());
        assert!(rational_solve(&a, &to_rational(&ints(&[1, 2]))).is_err());
    }

    #[test]
    fn rational_fallback_sees_parity_obstruction() {
        let a = IntegerMatrix::from_rows(&[[2]]);
        let x = rational_solve(&a, &to_rational(&ints(&[3]))).unwrap().unwrap();
        assert_eq!(x[0], BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn inconsistent_rational_system() {
        let a = IntegerMatrix::from_rows(&[[1, 1], [2, 2]]);
        assert!(rational_solve(&a, &to_rational(&ints(&[1, 3]))).unwrap().is_none());
        assert_eq!(rational_rank(&a), 1);
    }
}
