use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use relcone_core::lie::{self, root_system, sun, Alcove, Family, RootSystem};

fn all_systems() -> Vec<RootSystem> {
    let mut v = Vec::new();
    for n in 1..=6 {
        v.push(root_system(Family::A, n).unwrap());
    }
    for n in 2..=6 {
        v.push(root_system(Family::B, n).unwrap());
        v.push(root_system(Family::C, n).unwrap());
    }
    for n in 4..=6 {
        v.push(root_system(Family::D, n).unwrap());
    }
    for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        v.push(root_system(f, n).unwrap());
    }
    v
}

fn det(m: &[Vec<i64>]) -> i64 {
    // Laplace expansion; ranks stay at most 8
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

#[test]
fn cartan_determinants_are_centre_orders() {
    for rs in all_systems() {
        let n = rs.rank() as i64;
        let expected = match rs.family() {
            Family::A => n + 1,
            Family::B | Family::C => 2,
            Family::D => 4,
            Family::E => 9 - n,
            Family::F | Family::G => 1,
        };
        assert_eq!(det(rs.cartan()), expected, "{}", rs.name());
    }
}

#[test]
fn root_counts() {
    for rs in all_systems() {
        let n = rs.rank();
        let expected = match (rs.family(), n) {
            (Family::A, _) => n * (n + 1),
            (Family::B | Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        };
        assert_eq!(rs.root_count(), expected, "{}", rs.name());
    }
}

#[test]
fn long_roots_have_norm_two() {
    for rs in all_systems() {
        let theta = rs.highest_root();
        assert_eq!(rs.inner(&theta, &theta), BigRational::from_integer(BigInt::from(2)), "{}", rs.name());
    }
}

#[test]
fn vertices_prequantize_exactly_at_multiples_of_the_level() {
    for rs in all_systems().into_iter().filter(|rs| rs.rank() <= 4) {
        let k = lie::min_vertex_level(&rs).unwrap() as i64;
        for level in 1..=2 * k {
            let all = Alcove::new(&rs)
                .vertices
                .iter()
                .all(|v| lie::conjugacy_prequant(&rs, v, level).unwrap().prequantizable);
            assert_eq!(all, level % k == 0, "{} at level {level}", rs.name());
        }
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

proptest! {
    #[test]
    fn reduction_lands_in_the_alcove(raw in prop::collection::vec((-40i64..=40, 1i64..=7), 3), pick in 0usize..3) {
        let rs = [root_system(Family::A, 2).unwrap(), root_system(Family::G, 2).unwrap(), root_system(Family::B, 3).unwrap()][pick].clone();
        let mut xi: Vec<BigRational> = raw.iter().map(|&(n, d)| rational(n, d)).collect();
        if rs.family() != Family::B {
            // sum-zero models
            let total: BigRational = xi.iter().sum();
            xi[2] -= total;
        }
        let r = lie::reduce_to_alcove(&rs, &xi).unwrap();
        prop_assert!(Alcove::contains(&rs, &r.point));
        let again = lie::reduce_to_alcove(&rs, &r.point).unwrap();
        prop_assert_eq!(again.reflections, 0);
        prop_assert_eq!(again.point, r.point);
    }

    #[test]
    fn eigenphases_ignore_integer_shifts(raw in prop::collection::vec((-20i64..=20, 1i64..=6), 2..6), shift in -3i64..=3) {
        let mut phases: Vec<BigRational> = raw.iter().map(|&(n, d)| rational(n, d)).collect();
        let total: BigRational = phases.iter().sum();
        let last = phases.len() - 1;
        phases[last] -= total;
        let lambda = sun::sun_normalize_eigenphases(&phases).unwrap();
        let shifted: Vec<BigRational> = phases.iter().map(|p| p + rational(shift, 1)).collect();
        let total: BigRational = shifted.iter().sum();
        prop_assume!(total.is_integer());
        prop_assert_eq!(sun::sun_normalize_eigenphases(&shifted).unwrap(), lambda.clone());
        prop_assert!(lambda.iter().sum::<BigRational>().is_zero());
        let rs = root_system(Family::A, phases.len() - 1).unwrap();
        prop_assert!(Alcove::contains(&rs, &lambda));
        prop_assert!(!sun::sun_cover_membership(&lambda).unwrap().is_empty());
    }
}
