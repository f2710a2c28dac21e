//! Exactness checks for the long exact sequences attached to a chain map.
//!
//! Each slot `A → B → C` is checked as an equality of lattices inside the
//! chain group carrying `B`: `im(A → B) + boundaries = ker(B → C)`, where the
//! kernel is computed as a preimage of the boundaries of `C`. This is stronger
//! than comparing ranks and torsion orders, and it implies them.

use num_bigint::BigInt;
use serde::Serialize;

use super::cone::{mapping_cone, ConeComplex};
use super::{ChainComplex, ChainError, ChainMap};
use crate::algebra::{integer_solve, AbelianGroupPresentation, IntegerMatrix, Lattice, Subquotient};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotCheck {
    /// Degree of the middle group.
    pub degree: i64,
    /// Which group sits in the middle, e.g. `"H(f)"`.
    pub group: &'static str,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub slots: Vec<SlotCheck>,
}

impl ExactnessReport {
    pub fn all_exact(&self) -> bool {
        self.slots.iter().all(|s| s.exact)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SlotCheck> {
        self.slots.iter().filter(|s| !s.exact)
    }
}

/// Kernel of the induced map `B → C` on homology, pulled back to cycles of
/// `B`: `{ b ∈ Z_B : φ(b) ∈ B_C }`.
fn homology_kernel(zb: &Lattice, phi: &IntegerMatrix, bc: &Lattice) -> Lattice {
    zb.preimage_within(phi, bc)
}

/// Image of `A → B` plus boundaries of `B`.
fn homology_image(za: &Lattice, psi: &IntegerMatrix, bb: &Lattice) -> Lattice {
    za.image(psi).sum(bb)
}

/// `… → H_n(Y) → H_n(f) → H_{n-1}(X) → H_{n-1}(Y) → …`
pub fn cone_sequence_exactness(f: &ChainMap) -> Result<ExactnessReport, ChainError> {
    let cone = mapping_cone(f)?;
    let (x, y) = (f.source(), f.target());
    let c = cone.complex();
    let mut slots = Vec::new();
    for n in c.degrees() {
        // at H_n(f):  H_n(Y) --ι--> H_n(f) --π--> H_{n-1}(X)
        let iota = cone.second_inclusion(n);
        let pi = cone.first_projection(n);
        let im = homology_image(&y.cycles(n), &iota, &c.boundaries(n));
        let ker = homology_kernel(&c.cycles(n), &pi, &x.boundaries(n - 1));
        slots.push(SlotCheck {
            degree: n,
            group: "H(f)",
            exact: im.same_as(&ker),
        });

        // at H_{n-1}(X):  H_n(f) --π--> H_{n-1}(X) --f--> H_{n-1}(Y)
        let fm = f.component(n - 1);
        let im = homology_image(&c.cycles(n), &pi, &x.boundaries(n - 1));
        let ker = homology_kernel(&x.cycles(n - 1), &fm, &y.boundaries(n - 1));
        slots.push(SlotCheck {
            degree: n - 1,
            group: "H(X)",
            exact: im.same_as(&ker),
        });

        // at H_{n-1}(Y):  H_{n-1}(X) --f--> H_{n-1}(Y) --ι--> H_{n-1}(f)
        let iota_below = cone.second_inclusion(n - 1);
        let im = homology_image(&x.cycles(n - 1), &fm, &y.boundaries(n - 1));
        let ker = homology_kernel(&y.cycles(n - 1), &iota_below, &c.boundaries(n - 1));
        slots.push(SlotCheck {
            degree: n - 1,
            group: "H(Y)",
            exact: im.same_as(&ker),
        });
    }
    Ok(ExactnessReport { slots })
}

/// Homology of the subcomplex `ker f ⊆ X` and the quotient `Y / f(X)`,
/// the relative homology, and exactness of
/// `… → H_{n-1}(ker f) → H_n(f) → H_n(coker f) → H_{n-2}(ker f) → …`.
#[derive(Clone, Debug, Serialize)]
pub struct KerCokerReport {
    pub degrees: Vec<i64>,
    pub kernel_homology: Vec<AbelianGroupPresentation>,
    pub cokernel_homology: Vec<AbelianGroupPresentation>,
    pub relative_homology: Vec<AbelianGroupPresentation>,
    pub injective: bool,
    pub surjective: bool,
    pub exactness: ExactnessReport,
    /// Injective `f`: `H_n(f) ≅ H_n(coker f)` in every degree.
    /// Surjective `f`: `H_n(f) ≅ H_{n-1}(ker f)`. `None` if neither applies.
    pub special_case_holds: Option<bool>,
}

struct KerCoker<'a> {
    f: &'a ChainMap,
    cone: ConeComplex,
}

impl<'a> KerCoker<'a> {
    fn x(&self) -> &ChainComplex {
        self.f.source()
    }

    fn y(&self) -> &ChainComplex {
        self.f.target()
    }

    fn kernel(&self, n: i64) -> Lattice {
        Lattice::kernel(&self.f.component(n))
    }

    fn image(&self, n: i64) -> Lattice {
        Lattice::span(&self.f.component(n))
    }

    fn ker_cycles(&self, n: i64) -> Lattice {
        self.kernel(n).intersection(&self.x().cycles(n))
    }

    fn ker_boundaries(&self, n: i64) -> Lattice {
        self.kernel(n + 1).image(&self.x().out_of(n + 1))
    }

    fn ker_homology(&self, n: i64) -> Subquotient {
        Subquotient::new(self.ker_cycles(n), self.ker_boundaries(n))
    }

    /// Chains of `Y` whose boundary lies in `f(X)`.
    fn coker_cycles(&self, n: i64) -> Lattice {
        Lattice::full(self.y().dim(n)).preimage_within(&self.y().out_of(n), &self.image(n - 1))
    }

    fn coker_boundaries(&self, n: i64) -> Lattice {
        self.image(n).sum(&self.y().boundaries(n))
    }

    fn coker_homology(&self, n: i64) -> Subquotient {
        Subquotient::new(self.coker_cycles(n), self.coker_boundaries(n))
    }

    /// Columns `∂θᵢ` for a basis `ηᵢ` of coker cycles, `∂ηᵢ = f(θᵢ)`.
    fn delta_matrix(&self, n: i64) -> Result<IntegerMatrix, ChainError> {
        let top = self.coker_cycles(n);
        let fm = self.f.component(n - 1);
        let dx = self.x().out_of(n - 1);
        let mut cols = Vec::with_capacity(top.rank());
        for i in 0..top.rank() {
            let eta = top.basis_vector(i);
            let d_eta = self.y().out_of(n).mul_vec(&eta).map_err(ChainError::Algebra)?;
            let theta = integer_solve(&fm, &d_eta)
                .map_err(ChainError::Algebra)?
                .ok_or(ChainError::Inconsistent("∂η not in f(X) for a cokernel cycle"))?;
            cols.push(dx.mul_vec(&theta).map_err(ChainError::Algebra)?);
        }
        Ok(IntegerMatrix::from_columns(self.x().dim(n - 2), &cols))
    }

    fn exactness(&self) -> Result<ExactnessReport, ChainError> {
        let c = self.cone.complex();
        let mut slots = Vec::new();
        for n in c.degrees() {
            // at H_n(f):  H_{n-1}(ker) --j--> H_n(f) --k--> H_n(coker)
            let j = self.cone.first_inclusion(n);
            let k = self.cone.second_projection(n);
            let im = homology_image(&self.ker_cycles(n - 1), &j, &c.boundaries(n));
            let ker = homology_kernel(&c.cycles(n), &k, &self.coker_boundaries(n));
            slots.push(SlotCheck {
                degree: n,
                group: "H(f)",
                exact: im.same_as(&ker),
            });

            // at H_n(coker):  H_n(f) --k--> H_n(coker) --δ--> H_{n-2}(ker)
            let im = homology_image(&c.cycles(n), &k, &self.coker_boundaries(n));
            let top = self.coker_cycles(n);
            let delta = self.delta_matrix(n)?;
            let coords = Lattice::full(top.rank()).preimage_within(&delta, &self.ker_boundaries(n - 2));
            let ker = coords.image(top.basis());
            let ker = ker.sum(&self.coker_boundaries(n));
            slots.push(SlotCheck {
                degree: n,
                group: "H(coker f)",
                exact: im.same_as(&ker),
            });

            // at H_{n-2}(ker):  H_n(coker) --δ--> H_{n-2}(ker) --j--> H_{n-1}(f)
            let im = Lattice::span(&delta).sum(&self.ker_boundaries(n - 2));
            let j_below = self.cone.first_inclusion(n - 1);
            let ker = homology_kernel(&self.ker_cycles(n - 2), &j_below, &c.boundaries(n - 1));
            slots.push(SlotCheck {
                degree: n - 2,
                group: "H(ker f)",
                exact: im.same_as(&ker),
            });
        }
        Ok(ExactnessReport { slots })
    }
}

pub fn ker_coker_sequence(f: &ChainMap) -> Result<KerCokerReport, ChainError> {
    let kc = KerCoker {
        f,
        cone: mapping_cone(f)?,
    };
    let degrees: Vec<i64> = kc.cone.complex().degrees().collect();
    let kernel_homology: Vec<_> = degrees.iter().map(|&n| kc.ker_homology(n).group().clone()).collect();
    let cokernel_homology: Vec<_> = degrees.iter().map(|&n| kc.coker_homology(n).group().clone()).collect();
    let relative_homology: Vec<_> = degrees
        .iter()
        .map(|&n| kc.cone.complex().homology_group(n).group().clone())
        .collect();
    let injective = f.degrees().all(|n| kc.kernel(n).rank() == 0);
    let surjective = f
        .degrees()
        .all(|n| kc.image(n).same_as(&Lattice::full(f.target().dim(n))));
    let special_case_holds = if injective {
        Some(relative_homology == cokernel_homology)
    } else if surjective {
        Some(
            degrees
                .iter()
                .zip(&relative_homology)
                .all(|(&n, h)| *h == *kc.ker_homology(n - 1).group()),
        )
    } else {
        None
    };
    let exactness = kc.exactness()?;
    Ok(KerCokerReport {
        degrees,
        kernel_homology,
        cokernel_homology,
        relative_homology,
        injective,
        surjective,
        exactness,
        special_case_holds,
    })
}

/// `δ[η mod f(X)] = [∂θ]` for a single cokernel cycle, with `∂η = f(θ)`.
pub fn cokernel_connecting(f: &ChainMap, n: i64, eta: &[BigInt]) -> Result<Vec<BigInt>, ChainError> {
    let y = f.target();
    let d_eta = y.out_of(n).mul_vec(eta).map_err(ChainError::Algebra)?;
    let theta = integer_solve(&f.component(n - 1), &d_eta)
        .map_err(ChainError::Algebra)?
        .ok_or(ChainError::NotACycle { degree: n })?;
    f.source().out_of(n - 1).mul_vec(&theta).map_err(ChainError::Algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Grading;

    fn circle() -> ChainComplex {
        ChainComplex::new(Grading::Chain, 0, vec![1, 1], vec![IntegerMatrix::from_rows(&[[0]])]).unwrap()
    }

    #[test]
    fn times_two_injective_case() {
        let c = circle();
        let comps = [(0, IntegerMatrix::from_rows(&[[1]])), (1, IntegerMatrix::from_rows(&[[2]]))];
        let f = ChainMap::new(c.clone(), c, comps.into_iter().collect()).unwrap();
        let r = ker_coker_sequence(&f).unwrap();
        assert!(r.injective && !r.surjective);
        assert_eq!(r.special_case_holds, Some(true));
        assert!(r.exactness.all_exact(), "{:?}", r.exactness);
        let i1 = r.degrees.iter().position(|&n| n == 1).unwrap();
        assert_eq!(r.cokernel_homology[i1].to_string(), "ℤ/2");
        assert!(cone_sequence_exactness(&f).unwrap().all_exact());
    }

    #[test]
    fn projection_surjective_case() {
        let c = circle();
        let sum = c.direct_sum(&c).unwrap();
        let proj = IntegerMatrix::from_rows(&[[0, 1]]);
        let f = ChainMap::new(sum, c, [(0, proj.clone()), (1, proj)].into_iter().collect()).unwrap();
        let r = ker_coker_sequence(&f).unwrap();
        assert!(r.surjective && !r.injective);
        assert_eq!(r.special_case_holds, Some(true));
        assert!(r.exactness.all_exact());
    }

    #[test]
    fn identity_everything_vanishes() {
        let f = ChainMap::identity(&circle());
        let r = ker_coker_sequence(&f).unwrap();
        assert!(r.relative_homology.iter().all(AbelianGroupPresentation::is_trivial));
        assert!(r.cokernel_homology.iter().all(AbelianGroupPresentation::is_trivial));
        assert!(r.exactness.all_exact());
    }
}
