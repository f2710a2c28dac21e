//! Sublattices of `ℤⁿ` and their quotients.
//!
//! Every lattice keeps a unimodular change of coordinates that turns
//! membership into a handful of divisibility checks, so coordinates of a
//! vector with respect to the basis come out exactly or not at all.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::json_int_vec;
use super::{smith_normal_form, AbelianGroupPresentation, IntegerMatrix, SmithDecomposition};

#[derive(Clone, Debug)]
pub struct Lattice {
    ambient: usize,
    basis: IntegerMatrix,
    transform: IntegerMatrix,
    slots: Vec<(usize, BigInt)>,
    zero_rows: Vec<usize>,
}

impl Lattice {
    /// The whole of `ℤⁿ`.
    pub fn full(n: usize) -> Self {
        Lattice {
            ambient: n,
            basis: IntegerMatrix::identity(n),
            transform: IntegerMatrix::identity(n),
            slots: (0..n).map(|i| (i, BigInt::one())).collect(),
            zero_rows: Vec::new(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Lattice {
            ambient: n,
            basis: IntegerMatrix::zeros(n, 0),
            transform: IntegerMatrix::identity(n),
            slots: Vec::new(),
            zero_rows: (0..n).collect(),
        }
    }

    /// Column span of `gens`.
    pub fn span(gens: &IntegerMatrix) -> Self {
        let n = gens.rows();
        let s = smith_normal_form(gens);
        let mut basis = IntegerMatrix::zeros(n, s.rank);
        for j in 0..s.rank {
            let d = &s.d[(j, j)];
            for i in 0..n {
                basis[(i, j)] = &s.u_inv[(i, j)] * d;
            }
        }
        Lattice {
            ambient: n,
            basis,
            slots: (0..s.rank).map(|i| (i, s.d[(i, i)].clone())).collect(),
            zero_rows: (s.rank..n).collect(),
            transform: s.u,
        }
    }

    /// Kernel of `a : ℤ^cols → ℤ^rows`.
    pub fn kernel(a: &IntegerMatrix) -> Self {
        let s = smith_normal_form(a);
        Self::kernel_from_smith(a.cols(), &s)
    }

    pub(crate) fn kernel_from_smith(n: usize, s: &SmithDecomposition) -> Self {
        let r = s.rank;
        Lattice {
            ambient: n,
            basis: s.v.select_columns(r..n),
            transform: s.v_inv.clone(),
            slots: (r..n).map(|i| (i, BigInt::one())).collect(),
            zero_rows: (0..r).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    /// Basis vectors as columns (`ambient × rank`).
    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigInt> {
        self.basis.col(i)
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector outside the ambient space");
        let w = self.transform.mul_vec(v).expect("square transform");
        if self.zero_rows.iter().any(|&i| !w[i].is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(self.slots.len());
        for (i, d) in &self.slots {
            let (q, r) = w[*i].div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        (0..other.rank()).all(|j| self.contains(&other.basis_vector(j)))
    }

    pub fn same_as(&self, other: &Lattice) -> bool {
        self.ambient == other.ambient && self.contains_lattice(other) && other.contains_lattice(self)
    }

    /// Combination of basis vectors with the given coefficients.
    pub fn combine(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        self.basis.mul_vec(coeffs).expect("coefficient count matches rank")
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        Lattice::span(&self.basis.hstack(&other.basis))
    }

    pub fn intersection(&self, other: &Lattice) -> Lattice {
        let stacked = self.basis.hstack(&other.basis.neg());
        let ker = Lattice::kernel(&stacked);
        let first = ker.basis.select_rows(0..self.rank());
        Lattice::span(&self.basis.mul(&first))
    }

    /// `{ v ∈ self : map·v ∈ target }`.
    pub fn preimage_within(&self, map: &IntegerMatrix, target: &Lattice) -> Lattice {
        assert_eq!(map.cols(), self.ambient);
        assert_eq!(map.rows(), target.ambient);
        let image_of_basis = map.mul(&self.basis);
        let stacked = image_of_basis.hstack(&target.basis.neg());
        let ker = Lattice::kernel(&stacked);
        let first = ker.basis.select_rows(0..self.rank());
        Lattice::span(&self.basis.mul(&first))
    }

    /// Image under `map`.
    pub fn image(&self, map: &IntegerMatrix) -> Lattice {
        Lattice::span(&map.mul(&self.basis))
    }
}

/// Residues of a class in a finitely generated abelian group, laid out to
/// match [`AbelianGroupPresentation`]: one residue per torsion factor, then
/// the free coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassCoordinates {
    #[serde(with = "json_int_vec")]
    pub torsion: Vec<BigInt>,
    #[serde(with = "json_int_vec")]
    pub free: Vec<BigInt>,
}

impl ClassCoordinates {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().chain(&self.free).all(Zero::is_zero)
    }
}

/// `top / bottom` for lattices `bottom ⊆ top ⊆ ℤⁿ`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    top: Lattice,
    bottom: Lattice,
    relations: SmithDecomposition,
    group: AbelianGroupPresentation,
    torsion_slots: Vec<usize>,
    free_slots: Vec<usize>,
}

impl Subquotient {
    /// Panics if `bottom ⊄ top`; callers construct both from a complex where
    /// the inclusion is guaranteed.
    pub fn new(top: Lattice, bottom: Lattice) -> Self {
        let k = top.rank();
        let cols: Vec<Vec<BigInt>> = (0..bottom.rank())
            .map(|j| {
                top.coords(&bottom.basis_vector(j))
                    .expect("bottom lattice must lie inside top lattice")
            })
            .collect();
        let rel = IntegerMatrix::from_columns(k, &cols);
        let relations = smith_normal_form(&rel);
        let mut torsion_slots = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..relations.rank {
            let d = &relations.d[(i, i)];
            if !d.is_one() {
                torsion_slots.push(i);
                torsion.push(d.clone());
            }
        }
        let free_slots: Vec<usize> = (relations.rank..k).collect();
        let group = AbelianGroupPresentation {
            free_rank: free_slots.len(),
            torsion,
        };
        Subquotient {
            top,
            bottom,
            relations,
            group,
            torsion_slots,
            free_slots,
        }
    }

    pub fn group(&self) -> &AbelianGroupPresentation {
        &self.group
    }

    pub fn top(&self) -> &Lattice {
        &self.top
    }

    pub fn bottom(&self) -> &Lattice {
        &self.bottom
    }

    /// Coordinates of the class of `v`, or `None` when `v ∉ top`.
    pub fn class_of(&self, v: &[BigInt]) -> Option<ClassCoordinates> {
        let u = self.top.coords(v)?;
        let y = self.relations.u.mul_vec(&u).expect("square");
        let torsion = self
            .torsion_slots
            .iter()
            .map(|&i| y[i].mod_floor(&self.relations.d[(i, i)]))
            .collect();
        let free = self.free_slots.iter().map(|&i| y[i].clone()).collect();
        Some(ClassCoordinates { torsion, free })
    }

    /// Reduce residues into canonical range.
    pub fn normalize(&self, c: &ClassCoordinates) -> ClassCoordinates {
        ClassCoordinates {
            torsion: c
                .torsion
                .iter()
                .zip(&self.torsion_slots)
                .map(|(x, &i)| x.mod_floor(&self.relations.d[(i, i)]))
                .collect(),
            free: c.free.clone(),
        }
    }

    pub fn add(&self, a: &ClassCoordinates, b: &ClassCoordinates) -> ClassCoordinates {
        let sum = ClassCoordinates {
            torsion: a.torsion.iter().zip(&b.torsion).map(|(x, y)| x + y).collect(),
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
        };
        self.normalize(&sum)
    }

    fn generator_at(&self, slot: usize) -> Vec<BigInt> {
        let p_inv_col = self.relations.u_inv.col(slot);
        self.top.combine(&p_inv_col)
    }

    /// Representatives of the torsion generators, in presentation order.
    pub fn torsion_generators(&self) -> Vec<Vec<BigInt>> {
        self.torsion_slots.iter().map(|&i| self.generator_at(i)).collect()
    }

    /// Representatives of a basis of the free part.
    pub fn free_generators(&self) -> Vec<Vec<BigInt>> {
        self.free_slots.iter().map(|&i| self.generator_at(i)).collect()
    }

    /// `v` represents the zero class.
    pub fn is_trivial_class(&self, v: &[BigInt]) -> Option<bool> {
        self.top.coords(v)?;
        Some(self.bottom.contains(v))
    }
}
