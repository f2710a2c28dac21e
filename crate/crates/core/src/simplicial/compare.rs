use serde::Serialize;

use super::cone::{mapping_cylinder, topological_mapping_cone};
use super::{DeltaComplex, SimplicialError, SimplicialMap};
use crate::algebra::AbelianGroupPresentation;
use crate::chain::{mapping_cone, ChainComplex};

/// Reduced homology `H̃_n`; `H̃_0` drops one free summand of `H_0` when the
/// complex is nonempty.
pub fn reduced_homology(c: &ChainComplex, nonempty: bool, n: i64) -> AbelianGroupPresentation {
    let mut h = c.homology_group(n).group().clone();
    if n == 0 && nonempty {
        assert!(h.free_rank > 0, "a nonempty complex has free H_0");
        h.free_rank -= 1;
    }
    h
}

pub fn delta_reduced_homology(k: &DeltaComplex, n: i64) -> AbelianGroupPresentation {
    reduced_homology(&k.chain_complex(), !k.is_empty(), n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeComparison {
    pub degree: i64,
    /// Homology of the algebraic cone of `f_*`.
    pub algebraic: AbelianGroupPresentation,
    /// Reduced homology of the topological cone.
    pub topological: AbelianGroupPresentation,
    /// Homology of the cylinder relative to `X × 0`.
    pub cylinder: AbelianGroupPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeComparison {
    pub degrees: Vec<DegreeComparison>,
    /// `H(Cyl) ≅ H(Y)` in every degree.
    pub cylinder_retracts: bool,
    pub euler_additive: bool,
}

impl ConeComparison {
    pub fn isomorphic_everywhere(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.algebraic == d.topological && d.algebraic == d.cylinder)
    }
}

/// Computes `H_n(f)` three ways and fails loudly if they differ.
pub fn cone_comparison(f: &SimplicialMap) -> Result<ConeComparison, SimplicialError> {
    let algebraic = mapping_cone(&f.chain_map()).map_err(SimplicialError::Chain)?;
    let topo = topological_mapping_cone(f);
    let cyl = mapping_cylinder(f);
    let topo_chains = topo.complex.chain_complex();
    let rel_chains = cyl.relative_chain_complex();
    let hi = algebraic
        .complex()
        .hi()
        .max(topo_chains.hi())
        .max(rel_chains.hi());
    let degrees: Vec<DegreeComparison> = (0..=hi)
        .map(|n| DegreeComparison {
            degree: n,
            algebraic: algebraic.complex().homology_group(n).group().clone(),
            topological: reduced_homology(&topo_chains, true, n),
            cylinder: rel_chains.homology_group(n).group().clone(),
        })
        .collect();
    let y = f.target().chain_complex();
    let cyl_chains = cyl.complex.chain_complex();
    let cylinder_retracts = (0..=hi).all(|n| cyl_chains.homology_group(n).group() == y.homology_group(n).group());
    let euler_additive =
        topo.complex.euler_characteristic() == f.target().euler_characteristic() + 1 - f.source().euler_characteristic();
    let report = ConeComparison {
        degrees,
        cylinder_retracts,
        euler_additive,
    };
    if let Some(d) = report
        .degrees
        .iter()
        .find(|d| d.algebraic != d.topological || d.algebraic != d.cylinder)
    {
        return Err(SimplicialError::Mismatch {
            degree: d.degree,
            algebraic: d.algebraic.to_string(),
            topological: d.topological.to_string(),
            cylinder: d.cylinder.to_string(),
        });
    }
    if !report.cylinder_retracts || !report.euler_additive {
        return Err(SimplicialError::Mismatch {
            degree: -1,
            algebraic: "cylinder or Euler characteristic check".into(),
            topological: format!("cylinder ≃ target: {}", report.cylinder_retracts),
            cylinder: format!("Euler additivity: {}", report.euler_additive),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::simplicial::builtins;

    fn z2() -> AbelianGroupPresentation {
        AbelianGroupPresentation::from_cyclic_orders(0, &[BigInt::from(2)])
    }

    fn groups(r: &ConeComparison) -> Vec<AbelianGroupPresentation> {
        r.degrees.iter().map(|d| d.algebraic.clone()).collect()
    }

    #[test]
    fn identity_cone_is_a_disk() {
        let r = cone_comparison(&builtins::map("id-circle").unwrap()).unwrap();
        assert!(groups(&r).iter().all(AbelianGroupPresentation::is_trivial));
    }

    #[test]
    fn degree_two_map_gives_rp2() {
        let f = builtins::map("deg2-circle-map").unwrap();
        let m = f.chain_map().component(1);
        for i in 0..3 {
            let s: i64 = (0..6).map(|j| i64::try_from(&m[(i, j)]).unwrap()).sum();
            assert_eq!(s, 2);
        }
        let r = cone_comparison(&f).unwrap();
        assert!(r.degrees[1].algebraic == z2() && r.degrees[1].topological == z2());
        assert!(r.degrees[2].cylinder.is_trivial());
        assert!(r.degrees[0].topological.is_trivial());
    }

    #[test]
    fn pair_of_points_in_circle() {
        let r = cone_comparison(&builtins::map("s0-in-circle").unwrap()).unwrap();
        assert_eq!(r.degrees[1].topological, AbelianGroupPresentation::free(2));
        assert!(r.degrees[0].algebraic.is_trivial());
    }

    #[test]
    fn constant_map_shifts_the_circle_up() {
        let r = cone_comparison(&builtins::map("circle-to-point").unwrap()).unwrap();
        assert_eq!(r.degrees[2].algebraic, AbelianGroupPresentation::free(1));
        assert!(r.degrees[1].algebraic.is_trivial());
    }

    #[test]
    fn empty_domain_adds_a_point() {
        let r = cone_comparison(&builtins::map("empty-into-circle").unwrap()).unwrap();
        // H(f) = H(Y) for empty X; the apex accounts for the reduction
        assert_eq!(groups(&r)[..2], [AbelianGroupPresentation::free(1), AbelianGroupPresentation::free(1)]);
    }

    #[test]
    fn contractible_inclusion() {
        let r = cone_comparison(&builtins::map("vertex-in-disk").unwrap()).unwrap();
        assert!(groups(&r).iter().all(AbelianGroupPresentation::is_trivial));
    }

    #[test]
    fn collapse_maps_agree() {
        for name in ["rp2-collapse", "suspended-rp2-collapse", "ball-in-sphere3"] {
            cone_comparison(&builtins::map(name).unwrap()).unwrap();
        }
    }

    #[test]
    fn random_loops_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 1..8 {
            for k in 1..=m {
                cone_comparison(&builtins::random_circle_map(&mut rng, m, k)).unwrap();
            }
            cone_comparison(&builtins::random_rp2_loop(&mut rng, m)).unwrap();
        }
    }
}
