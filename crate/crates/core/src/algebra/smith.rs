//! Smith normal form over ℤ with both unimodular factors and their inverses.
//!
//! Elimination always pivots on the entry of least absolute value in the
//! remaining block, which keeps intermediate growth in check on the small
//! dense matrices this crate deals with.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, IntegerMatrix};

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d₁ | d₂ | … | d_r` and zeros after position `rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Recheck every structural claim by exact arithmetic.
    pub fn verify(&self, a: &IntegerMatrix) -> Result<(), AlgebraError> {
        let (m, n) = a.shape();
        let fail = |what: &'static str| Err(AlgebraError::SmithCheck(what));
        if self.u.mul(a).mul(&self.v) != self.d {
            return fail("U·A·V != D");
        }
        if self.u.mul(&self.u_inv) != IntegerMatrix::identity(m) {
            return fail("U·U⁻¹ != I");
        }
        if self.v.mul(&self.v_inv) != IntegerMatrix::identity(n) {
            return fail("V·V⁻¹ != I");
        }
        for i in 0..m {
            for j in 0..n {
                let x = &self.d[(i, j)];
                if i != j && !x.is_zero() {
                    return fail("D not diagonal");
                }
                if i == j && (x.is_negative() || (i >= self.rank) != x.is_zero()) {
                    return fail("D diagonal not of the form d₁..d_r,0..0 with dᵢ>0");
                }
            }
        }
        for i in 1..self.rank {
            if !self.d[(i, i)].is_multiple_of(&self.d[(i - 1, i - 1)]) {
                return fail("divisibility chain broken");
            }
        }
        Ok(())
    }
}

/// Smith normal form with no limit on entry size.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    smith_normal_form_bounded(a, None).expect("unbounded elimination cannot hit a limit")
}

/// Same as [`smith_normal_form`], but aborts with
/// [`AlgebraError::ResourceLimit`] as soon as any working entry exceeds
/// `max_bits` bits.
pub fn smith_normal_form_bounded(
    a: &IntegerMatrix,
    max_bits: Option<u64>,
) -> Result<SmithDecomposition, AlgebraError> {
    let (m, n) = a.shape();
    let mut st = State {
        d: a.clone(),
        u: IntegerMatrix::identity(m),
        u_inv: IntegerMatrix::identity(m),
        v: IntegerMatrix::identity(n),
        v_inv: IntegerMatrix::identity(n),
    };
    let mut rank = 0;
    for t in 0..m.min(n) {
        if !st.diagonalize_at(t, max_bits)? {
            break;
        }
        rank = t + 1;
    }
    Ok(SmithDecomposition {
        u: st.u,
        u_inv: st.u_inv,
        d: st.d,
        v: st.v,
        v_inv: st.v_inv,
        rank,
    })
}

struct State {
    d: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl State {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += k·row[src]
    fn row_op(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// col[dst] += k·col[src]
    fn col_op(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (m, n) = self.d.shape();
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..m {
            for j in t..n {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                    let done = ax.is_one();
                    best = Some(((i, j), ax));
                    if done {
                        return best.map(|b| b.0);
                    }
                }
            }
        }
        best.map(|b| b.0)
    }

    fn check_limit(&self, max_bits: Option<u64>) -> Result<(), AlgebraError> {
        if let Some(limit) = max_bits {
            let bits = self.d.max_abs_entry().bits();
            if bits > limit {
                return Err(AlgebraError::ResourceLimit { bits, limit });
            }
        }
        Ok(())
    }

    /// Clears row and column `t` apart from a positive pivot dividing the
    /// rest of the block. Returns false when the remaining block is zero.
    fn diagonalize_at(&mut self, t: usize, max_bits: Option<u64>) -> Result<bool, AlgebraError> {
        let (m, n) = self.d.shape();
        loop {
            let Some((pi, pj)) = self.min_pivot(t) else {
                return Ok(false);
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..m {
                if self.d[(i, t)].is_zero() {
                    continue;
                }
                let q = self.d[(i, t)].div_floor(&self.d[(t, t)]);
                self.row_op(i, t, &-q);
                clean &= self.d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if self.d[(t, j)].is_zero() {
                    continue;
                }
                let q = self.d[(t, j)].div_floor(&self.d[(t, t)]);
                self.col_op(j, t, &-q);
                clean &= self.d[(t, j)].is_zero();
            }
            self.check_limit(max_bits)?;
            if !clean {
                continue;
            }
            let p = self.d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offender {
                self.row_op(t, i, &BigInt::one());
                continue;
            }
            if p.is_negative() {
                self.negate_row(t);
            }
            return Ok(true);
        }
    }
}
