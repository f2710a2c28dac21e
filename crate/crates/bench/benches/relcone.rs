use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use relcone_bench::{chain_maps, circle_maps};
use relcone_core::algebra::{smith_normal_form, IntegerMatrix};
use relcone_core::cech::{cech_cohomology, Nerve};
use relcone_core::chain::random::random_matrix;
use relcone_core::chain::{cone_sequence_exactness, is_quasi_iso, Coefficients};
use relcone_core::lie::{self, root_system, Alcove, Family};
use relcone_core::simplicial::cone_comparison;

fn smith(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith normal form");
    for n in [8, 16, 32] {
        let m: IntegerMatrix = random_matrix(&mut relcone_bench::rng(n as u64), n, n, 9);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| smith_normal_form(black_box(m))));
    }
    group.finish();
}

fn cones(c: &mut Criterion) {
    let maps = chain_maps(1, 20, 4, 5);
    c.bench_function("quasi-isomorphism test, 20 maps", |b| {
        b.iter(|| maps.iter().filter(|f| is_quasi_iso(f).unwrap()).count())
    });
    c.bench_function("cone sequence exactness, 20 maps", |b| {
        b.iter(|| maps.iter().all(|f| cone_sequence_exactness(f).unwrap().all_exact()))
    });
    let loops = circle_maps(2, 10, 12, 4);
    c.bench_function("cone comparison, 10 loops", |b| {
        b.iter(|| loops.iter().all(|f| cone_comparison(f).unwrap().isomorphic_everywhere()))
    });
}

fn cech(c: &mut Criterion) {
    let mut group = c.benchmark_group("Čech cohomology of sphere nerves");
    for d in [3, 5, 7] {
        let nerve = Nerve::simplex_boundary(d + 2);
        group.bench_with_input(BenchmarkId::from_parameter(d), &nerve, |b, n| {
            b.iter(|| cech_cohomology(n, Coefficients::Integer, d as i64).unwrap())
        });
    }
    group.finish();
}

fn lie_levels(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal vertex level");
    for (family, rank) in [(Family::A, 7), (Family::E, 6), (Family::E, 8), (Family::F, 4)] {
        let rs = root_system(family, rank).unwrap();
        group.bench_function(rs.name(), |b| b.iter(|| lie::min_vertex_level(&rs).unwrap()));
    }
    group.finish();
    let e8 = root_system(Family::E, 8).unwrap();
    c.bench_function("E8 roots and alcove", |b| {
        b.iter(|| {
            let rs = root_system(Family::E, 8).unwrap();
            Alcove::new(black_box(&rs)).vertices.len()
        })
    });
    let vertex = Alcove::new(&e8).vertices[4].clone();
    c.bench_function("E8 vertex prequantization", |b| {
        b.iter(|| lie::conjugacy_prequant(&e8, black_box(&vertex), 60).unwrap().prequantizable)
    });
}

criterion_group!(benches, smith, cones, cech, lie_levels);
criterion_main!(benches);
