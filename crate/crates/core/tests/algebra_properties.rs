use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use relcone_core::algebra::rational::{format_rational, parse_rational};
use relcone_core::algebra::{cokernel_presentation, integer_solve, rational_rank, smith_normal_form, IntegerMatrix};

fn matrix(max: usize) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-6i64..=6, r * c).prop_map(move |v| {
            IntegerMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn square(max: usize) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(-5i64..=5, n * n)
            .prop_map(move |v| IntegerMatrix::from_vec(n, n, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

/// Determinant by fraction-free elimination over ℚ.
fn determinant(a: &IntegerMatrix) -> BigInt {
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> =
        (0..n).map(|i| a.row(i).iter().cloned().map(BigRational::from_integer).collect()).collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot = &top[col];
        for row in rest {
            let factor = &row[col] / &pivot[col];
            for (x, p) in row.iter_mut().zip(pivot).skip(col) {
                *x -= &factor * p;
            }
        }
    }
    det.to_integer()
}

proptest! {
    #[test]
    fn smith_certificate_holds(a in matrix(6)) {
        let s = smith_normal_form(&a);
        prop_assert!(s.verify(&a).is_ok());
        prop_assert_eq!(s.rank, rational_rank(&a));
    }

    #[test]
    fn invariant_factors_multiply_to_the_determinant(a in square(5)) {
        let s = smith_normal_form(&a);
        let det = determinant(&a).abs();
        if s.rank == a.rows() {
            let product: BigInt = s.invariant_factors().iter().product();
            prop_assert_eq!(product, det);
        } else {
            prop_assert!(det.is_zero());
        }
    }

    #[test]
    fn cokernel_order_is_the_determinant(a in square(5)) {
        let g = cokernel_presentation(&a);
        let det = determinant(&a).abs();
        if det.is_zero() {
            prop_assert!(g.free_rank > 0);
        } else {
            prop_assert_eq!(g.free_rank, 0);
            let order: BigInt = g.torsion.iter().product();
            prop_assert_eq!(order, det);
        }
    }

    #[test]
    fn integer_solve_recovers_images(a in matrix(5), seed in prop::collection::vec(-4i64..=4, 5)) {
        let x: Vec<BigInt> = seed.iter().take(a.cols()).map(|&v| BigInt::from(v)).chain(std::iter::repeat(BigInt::zero())).take(a.cols()).collect();
        let b = a.mul_vec(&x).unwrap();
        let y = integer_solve(&a, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let q = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}
