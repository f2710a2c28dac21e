//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relcone_core::chain::random::{random_chain_map, random_complex, random_dims};
use relcone_core::chain::ChainMap;
use relcone_core::simplicial::{builtins, SimplicialMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random chain maps between complexes of `len` degrees with dimensions up to `max_dim`.
pub fn chain_maps(seed: u64, count: usize, len: usize, max_dim: usize) -> Vec<ChainMap> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let dx = random_dims(&mut rng, len, max_dim);
            let x = random_complex(&mut rng, &dx, 3);
            let dy = random_dims(&mut rng, len, max_dim);
            let y = random_complex(&mut rng, &dy, 3);
            random_chain_map(&mut rng, &x, &y, 3, 20)
        })
        .collect()
}

/// Loops of length `m` wrapping a `k`-gon.
pub fn circle_maps(seed: u64, count: usize, m: usize, k: usize) -> Vec<SimplicialMap> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let target = rng.gen_range(1..=k).min(m);
            builtins::random_circle_map(&mut rng, m, target)
        })
        .collect()
}
