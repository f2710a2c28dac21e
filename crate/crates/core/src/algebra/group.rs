use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::json_int_vec;
use super::{smith_normal_form, IntegerMatrix};

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` in canonical
/// form: every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Deserialize)]
pub struct AbelianGroupPresentation {
    pub free_rank: usize,
    #[serde(with = "json_int_vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupPresentation {
    pub fn trivial() -> Self {
        AbelianGroupPresentation {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupPresentation {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Canonical form of `ℤ^free_rank ⊕ ⨁ ℤ/orders[i]`. Orders of 1 are
    /// dropped, order 0 counts as a free summand.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let mut free = free_rank;
        let mut finite = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                free += 1;
            } else if !o.is_one() {
                finite.push(o);
            }
        }
        let n = finite.len();
        let d = IntegerMatrix::from_diagonal(n, n, &finite);
        let mut g = cokernel_presentation(&d);
        g.free_rank += free;
        g
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Largest invariant factor, i.e. the exponent of the torsion subgroup
    /// (1 when torsion-free).
    pub fn torsion_exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// `G ⊗ ℤ/m`.
    pub fn tensor_mod(&self, m: &BigInt) -> Self {
        let mut orders = vec![m.clone(); self.free_rank];
        orders.extend(self.torsion.iter().map(|d| d.gcd(m)));
        Self::from_cyclic_orders(0, &orders)
    }

    /// `Tor(G, ℤ/m)`.
    pub fn tor_mod(&self, m: &BigInt) -> Self {
        let orders: Vec<BigInt> = self.torsion.iter().map(|d| d.gcd(m)).collect();
        Self::from_cyclic_orders(0, &orders)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        Self::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }
}

impl fmt::Display for AbelianGroupPresentation {
    /// `ℤ^2 ⊕ ℤ/2 ⊕ ℤ/6`, `ℤ`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("ℤ/{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Serialized with its canonical string alongside the invariants.
impl Serialize for AbelianGroupPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            presentation: String,
            free_rank: usize,
            #[serde(with = "json_int_vec")]
            torsion: &'a [BigInt],
        }
        Repr {
            presentation: self.to_string(),
            free_rank: self.free_rank,
            torsion: &self.torsion,
        }
        .serialize(s)
    }
}

/// Presentation of `ℤ^rows / image(A)` for `A: ℤ^cols → ℤ^rows`.
pub fn cokernel_presentation(a: &IntegerMatrix) -> AbelianGroupPresentation {
    let s = smith_normal_form(a);
    AbelianGroupPresentation {
        free_rank: a.rows() - s.rank,
        torsion: s
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect(),
    }
}
