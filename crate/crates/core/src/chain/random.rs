//! Random small complexes, chain maps and homotopies for property tests and
//! benchmarks. All generators take an explicit RNG so runs are reproducible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;

use super::{ChainComplex, ChainMap, Grading, HomotopyOperator};
use crate::algebra::{integer_solve, IntegerMatrix, Lattice};

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    let data = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntegerMatrix::from_vec(rows, cols, data).expect("entry count")
}

/// Chain complex in degrees `0..dims.len()`. The lowest differential is random;
/// each higher one is a random combination of kernel vectors of the one below,
/// so `∂² = 0` by construction.
pub fn random_complex<R: Rng>(rng: &mut R, dims: &[usize], bound: i64) -> ChainComplex {
    let mut links: Vec<IntegerMatrix> = Vec::new();
    for i in 0..dims.len().saturating_sub(1) {
        let m = if i == 0 {
            random_matrix(rng, dims[0], dims[1], bound)
        } else {
            let ker = Lattice::kernel(&links[i - 1]);
            let mix = random_matrix(rng, ker.rank(), dims[i + 1], 1);
            ker.basis().mul(&mix)
        };
        links.push(m);
    }
    ChainComplex::new(Grading::Chain, 0, dims.to_vec(), links).expect("built to square to zero")
}

/// Random chain map `X → Y` between complexes over the same degrees.
///
/// The top component is drawn freely; each lower one is found by solving
/// `f_{n-1}·∂X_n = ∂Y_n·f_n` over ℤ row by row, then perturbed by a random
/// element of the solution lattice. Draws whose system has no integral
/// solution are discarded. After `attempts` failures the top component is
/// forced to zero, which always succeeds.
pub fn random_chain_map<R: Rng>(
    rng: &mut R,
    x: &ChainComplex,
    y: &ChainComplex,
    bound: i64,
    attempts: usize,
) -> ChainMap {
    for attempt in 0..=attempts {
        let top_bound = if attempt == attempts { 0 } else { bound };
        if let Some(comps) = try_descend(rng, x, y, top_bound) {
            if let Ok(f) = ChainMap::new(x.clone(), y.clone(), comps) {
                return f;
            }
        }
    }
    ChainMap::zero(x, y).expect("zero map commutes")
}

fn try_descend<R: Rng>(
    rng: &mut R,
    x: &ChainComplex,
    y: &ChainComplex,
    bound: i64,
) -> Option<BTreeMap<i64, IntegerMatrix>> {
    let hi = x.hi().max(y.hi());
    let lo = x.lo().min(y.lo());
    let mut comps = BTreeMap::new();
    let mut current = random_matrix(rng, y.dim(hi), x.dim(hi), bound);
    comps.insert(hi, current.clone());
    for n in (lo + 1..=hi).rev() {
        // rows r of f_{n-1} solve  ∂X_nᵀ · rᵀ = (∂Y_n f_n)ᵀ_r
        let rhs = y.out_of(n).mul(&current);
        let a = x.out_of(n).transpose();
        let ker = Lattice::kernel(&a);
        let mut rows = Vec::with_capacity(rhs.rows());
        for r in 0..rhs.rows() {
            let sol = integer_solve(&a, rhs.row(r)).ok()??;
            let mix: Vec<BigInt> = (0..ker.rank()).map(|_| BigInt::from(rng.gen_range(-1..=1))).collect();
            let extra = ker.combine(&mix);
            rows.push(sol.iter().zip(&extra).map(|(s, e)| s + e).collect::<Vec<_>>());
        }
        let cols = x.dim(n - 1);
        current = IntegerMatrix::from_vec(rows.len(), cols, rows.concat()).ok()?;
        comps.insert(n - 1, current.clone());
    }
    Some(comps)
}

/// Random `h_n : X_n → Y_{n+1}`.
pub fn random_homotopy<R: Rng>(rng: &mut R, x: &ChainComplex, y: &ChainComplex, bound: i64) -> HomotopyOperator {
    let comps = x
        .degrees()
        .map(|n| (n, random_matrix(rng, y.dim(n + 1), x.dim(n), bound)))
        .collect();
    HomotopyOperator::new(comps)
}

/// `(f, g, h)` with `g = f − h∂ − ∂h`.
pub fn random_homotopy_triple<R: Rng>(
    rng: &mut R,
    x: &ChainComplex,
    y: &ChainComplex,
    bound: i64,
) -> (ChainMap, ChainMap, HomotopyOperator) {
    let f = random_chain_map(rng, x, y, bound, 20);
    let h = random_homotopy(rng, x, y, bound);
    let g = h.deform(&f).expect("deformation of a chain map commutes");
    (f, g, h)
}

/// Random dimensions `1..=max_dim` for `len` degrees.
pub fn random_dims<R: Rng>(rng: &mut R, len: usize, max_dim: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(1..=max_dim)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_objects() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut nonzero = 0;
        for _ in 0..20 {
            let dx = random_dims(&mut rng, 3, 4);
            let dy = random_dims(&mut rng, 3, 4);
            let x = random_complex(&mut rng, &dx, 3);
            let y = random_complex(&mut rng, &dy, 3);
            let f = random_chain_map(&mut rng, &x, &y, 3, 20);
            if f.degrees().any(|n| !f.component(n).is_zero()) {
                nonzero += 1;
            }
            let (f, g, h) = random_homotopy_triple(&mut rng, &x, &y, 2);
            h.check(&f, &g).unwrap();
        }
        assert!(nonzero > 10, "only {nonzero} nonzero maps");
    }
}
