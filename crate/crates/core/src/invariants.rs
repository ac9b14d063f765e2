//! Rank and shape invariants of group expressions, including property (𝔓):
//! no quasi-cyclic group `Z(p^inf)` is an epimorphic image.
//!
//! # Computing (𝔓) term by term
//!
//! A finite direct sum `A ⊕ B` maps onto `Z(p^inf)` iff `A` or `B` does. If
//! `f: A ⊕ B → Z(p^inf)` is onto, then `f(A) + f(B) = Z(p^inf)`; every proper
//! subgroup of `Z(p^inf)` is finite, so if both images were proper their sum
//! would be finite. The converse is composition with a projection. An
//! expression has finitely many terms, so (𝔓) is decided per term.
//!
//! Per term `atom^m`:
//!
//! * `Q` maps onto `Q/Z ≅ ⊕_p Z(p^inf)`, hence onto every `Z(p^inf)`;
//! * `Z(p^inf)` maps onto itself;
//! * `B(p) = ⊕_k Z(p^k)` maps onto `Z(p^inf)` by sending the generator of
//!   `Z(p^k)` to an element of order `p^k`; the images are the cyclic
//!   subgroups of each order, whose union is `Z(p^inf)`;
//! * `TF(n; S)` maps onto `Z(p^inf)` exactly for `p ∈ S` (local freeness at
//!   `p` is equivalent to the absence of such an image);
//! * `Z(p^k)^m` is bounded, so its images are bounded;
//! * `Z^m` with `m` finite is finitely generated, and so are its images.
//!
//! A nonzero torsion-free atom with infinite multiplicity fails (𝔓) at every
//! prime: `Z(q^inf)` is injective, so for each `j` some map from the atom hits
//! an element of order `q^j`, and the sum of countably many such maps on
//! distinct copies is onto.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::cardinal::Cardinal;
use crate::group::{Atom, GroupExpr, ModelError};
use crate::primes;

/// A set of primes that may be the set of all primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSet {
    All,
    Finite(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn empty() -> PrimeSet {
        PrimeSet::Finite(BTreeSet::new())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PrimeSet::Finite(s) if s.is_empty())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::All => primes::is_prime(p),
            PrimeSet::Finite(s) => s.contains(&p),
        }
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        match (self, other) {
            (PrimeSet::Finite(a), PrimeSet::Finite(b)) => PrimeSet::Finite(a | b),
            _ => PrimeSet::All,
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSet::All => f.write_str("all primes"),
            PrimeSet::Finite(s) => {
                let items: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
        }
    }
}

impl Serialize for PrimeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            PrimeSet::All => serializer.serialize_str("all"),
            PrimeSet::Finite(s) => serializer.collect_seq(s),
        }
    }
}

fn require_prime(p: u64) -> Result<(), ModelError> {
    if primes::is_prime(p) {
        Ok(())
    } else {
        Err(ModelError::NotPrime(p))
    }
}

/// Torsion-free rank `r_0`.
pub fn r0(g: &GroupExpr) -> Cardinal {
    g.terms()
        .iter()
        .map(|(atom, mult)| Cardinal::Finite(atom.torsion_free_rank()) * *mult)
        .sum()
}

/// `p`-rank `r_p`, the dimension of the socle `G[p]` over `Z/p`.
pub fn rp(g: &GroupExpr, p: u64) -> Result<Cardinal, ModelError> {
    require_prime(p)?;
    Ok(rp_unchecked(g, p))
}

fn rp_unchecked(g: &GroupExpr, p: u64) -> Cardinal {
    g.terms()
        .iter()
        .filter(|(atom, _)| atom.prime() == Some(p))
        .map(|(atom, mult)| match atom {
            Atom::UnboundedDsc { .. } => Cardinal::ALEPH_0 * *mult,
            _ => *mult,
        })
        .sum()
}

/// `T_p(G)`.
pub fn primary_component(g: &GroupExpr, p: u64) -> Result<GroupExpr, ModelError> {
    require_prime(p)?;
    Ok(g.primary_component(p))
}

/// Whether `T_p(G)` is elementary ⊕ finite: bounded, with only finitely many
/// cyclic summands of order at least `p^2`.
pub fn p_shape_elem_plus_finite(g: &GroupExpr, p: u64) -> bool {
    g.terms().iter().filter(|(atom, _)| atom.prime() == Some(p)).all(|(atom, mult)| match atom {
        Atom::Cyclic { k: 1, .. } => true,
        Atom::Cyclic { .. } => mult.is_finite(),
        _ => false,
    })
}

/// Whether `T_p(G)` is bounded.
pub fn is_bounded_at(g: &GroupExpr, p: u64) -> bool {
    g.terms()
        .iter()
        .all(|(atom, _)| atom.prime() != Some(p) || matches!(atom, Atom::Cyclic { .. }))
}

/// Elementary: a direct sum of cyclic groups of prime order.
pub fn is_elementary(g: &GroupExpr) -> bool {
    g.terms().iter().all(|(atom, _)| matches!(atom, Atom::Cyclic { k: 1, .. }))
}

/// Primes `p` for which `Z(p^inf)` is an epimorphic image.
pub fn quasi_cyclic_image_primes(g: &GroupExpr) -> PrimeSet {
    g.terms().iter().fold(PrimeSet::empty(), |acc, (atom, mult)| {
        let here = match atom {
            Atom::Rational => PrimeSet::All,
            Atom::FreeZ | Atom::TorsionFreeFr { .. } if mult.is_infinite() => PrimeSet::All,
            Atom::Prufer { p } | Atom::UnboundedDsc { p } => PrimeSet::Finite([*p].into()),
            Atom::TorsionFreeFr { non_free_primes, .. } => PrimeSet::Finite(non_free_primes.clone()),
            Atom::FreeZ | Atom::Cyclic { .. } => PrimeSet::empty(),
        };
        acc.union(&here)
    })
}

/// Property (𝔓).
pub fn property_p(g: &GroupExpr) -> bool {
    quasi_cyclic_image_primes(g).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantProfile {
    pub r0: Cardinal,
    pub rp: BTreeMap<u64, Cardinal>,
    pub divisible_rational_rank: Cardinal,
    pub prufer_ranks: BTreeMap<u64, Cardinal>,
    pub is_torsion: bool,
    pub is_torsion_free: bool,
    pub is_reduced: bool,
    pub is_elementary: bool,
    pub bounded_at: BTreeMap<u64, bool>,
    pub p_shape_elem_plus_finite: BTreeMap<u64, bool>,
    pub property_p: bool,
    pub quasi_cyclic_image_primes: PrimeSet,
}

impl InvariantProfile {
    /// `r_p`, with absent primes reading as zero.
    pub fn rp_at(&self, p: u64) -> Cardinal {
        self.rp.get(&p).copied().unwrap_or_default()
    }

    /// Every `r_p` finite.
    pub fn all_rp_finite(&self) -> bool {
        self.rp.values().all(|c| c.is_finite())
    }

    pub fn has_prufer(&self) -> bool {
        !self.prufer_ranks.is_empty()
    }

    /// Primes at which `T_p` is not elementary ⊕ finite.
    pub fn shape_failures(&self) -> impl Iterator<Item = u64> + '_ {
        self.p_shape_elem_plus_finite.iter().filter(|(_, ok)| !**ok).map(|(p, _)| *p)
    }
}

pub fn invariant_profile(g: &GroupExpr) -> InvariantProfile {
    let torsion_primes = g.torsion_primes();
    let prufer_ranks = g
        .terms()
        .iter()
        .filter_map(|(atom, mult)| match atom {
            Atom::Prufer { p } => Some((*p, *mult)),
            _ => None,
        })
        .collect();
    let qcip = quasi_cyclic_image_primes(g);
    InvariantProfile {
        r0: r0(g),
        rp: torsion_primes.iter().map(|&p| (p, rp_unchecked(g, p))).collect(),
        divisible_rational_rank: g.multiplicity(&Atom::Rational),
        prufer_ranks,
        is_torsion: g.is_torsion(),
        is_torsion_free: g.is_torsion_free(),
        is_reduced: g.is_reduced(),
        is_elementary: is_elementary(g),
        bounded_at: torsion_primes.iter().map(|&p| (p, is_bounded_at(g, p))).collect(),
        p_shape_elem_plus_finite: torsion_primes
            .iter()
            .map(|&p| (p, p_shape_elem_plus_finite(g, p)))
            .collect(),
        property_p: qcip.is_empty(),
        quasi_cyclic_image_primes: qcip,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_group_expr;
    use Cardinal::{Aleph, Finite};

    fn g(s: &str) -> GroupExpr {
        parse_group_expr(s).unwrap()
    }

    #[test]
    fn r0_examples() {
        assert_eq!(r0(&g("Z^3 + Q^2 + Z(2^3)")), Finite(5));
        assert_eq!(r0(&g("TF(2;3,5) + Z")), Finite(3));
        assert_eq!(r0(&g("Z^w")), Aleph(0));
        assert_eq!(r0(&g("Z(5^inf)^w")), Finite(0));
    }

    #[test]
    fn rp_examples() {
        assert_eq!(rp(&g("Z(2)^w + Z(2^3)^4"), 2), Ok(Aleph(0)));
        assert_eq!(rp(&g("B(3)"), 3), Ok(Aleph(0)));
        assert_eq!(rp(&g("Z(5^inf)"), 7), Ok(Finite(0)));
        assert_eq!(rp(&g("B(3)^w1"), 3), Ok(Aleph(1)));
        assert_eq!(rp(&g("Z"), 9), Err(ModelError::NotPrime(9)));
    }

    #[test]
    fn primary_component_examples() {
        assert_eq!(primary_component(&g("Z(2)^3 + Z(3^2) + Z"), 3), Ok(g("Z(3^2)")));
        assert_eq!(primary_component(&g("B(2) + Z(2^inf)"), 2), Ok(g("B(2) + Z(2^inf)")));
        assert_eq!(primary_component(&g("Z^3"), 2), Ok(GroupExpr::zero()));
        assert!(primary_component(&g("Z"), 1).is_err());
    }

    #[test]
    fn shape_examples() {
        assert!(p_shape_elem_plus_finite(&g("Z(2)^w + Z(2^4)^3"), 2));
        assert!(!p_shape_elem_plus_finite(&g("Z(3^2)^w"), 3));
        assert!(!p_shape_elem_plus_finite(&g("B(5)"), 5));
        assert!(!p_shape_elem_plus_finite(&g("Z(5^inf)"), 5));
        assert!(p_shape_elem_plus_finite(&g("B(5)"), 7));
    }

    #[test]
    fn quasi_cyclic_images() {
        let q = quasi_cyclic_image_primes(&g("Q"));
        assert_eq!(q, PrimeSet::All);
        assert!(!q.is_empty());
        assert!(q.contains(101));
        assert!(property_p(&g("Z^5")));
        assert_eq!(quasi_cyclic_image_primes(&g("B(2)")), PrimeSet::Finite([2].into()));
        assert_eq!(quasi_cyclic_image_primes(&g("TF(2;3)")), PrimeSet::Finite([3].into()));
        assert!(property_p(&g("Z(2^5)^w + TF(3)")));
        assert_eq!(quasi_cyclic_image_primes(&g("Z^w")), PrimeSet::All);
        assert_eq!(quasi_cyclic_image_primes(&g("TF(2)^w1")), PrimeSet::All);
    }

    #[test]
    fn profile_of_quasi_cyclic() {
        let p = invariant_profile(&g("Z(2^inf)"));
        assert_eq!(p.r0, Finite(0));
        assert_eq!(p.rp_at(2), Finite(1));
        assert_eq!(p.prufer_ranks.get(&2), Some(&Finite(1)));
        assert!(p.is_torsion);
        assert!(!p.is_reduced);
        assert!(!p.property_p);
    }

    #[test]
    fn profile_of_zero() {
        let p = invariant_profile(&GroupExpr::zero());
        assert_eq!(p.r0, Finite(0));
        assert!(p.rp.is_empty());
        assert!(p.is_torsion && p.is_torsion_free);
        assert!(p.is_elementary && p.is_reduced && p.property_p);
    }

    #[test]
    fn profile_of_z_plus_elementary_3() {
        // Hand computation from the atom tables:
        // r0: Z contributes 1, Z(3) contributes 0 -> 1.
        // r3: Z(3)^w contributes its multiplicity -> aleph0.
        // reduced: no Q or Prufer atom. Shape at 3: only k = 1 terms -> true.
        // (𝔓): Z and Z(3) contribute no quasi-cyclic images -> true.
        let p = invariant_profile(&g("Z + Z(3)^w"));
        assert_eq!(p.r0, Finite(1));
        assert_eq!(p.rp_at(3), Aleph(0));
        assert!(p.is_reduced);
        assert_eq!(p.p_shape_elem_plus_finite.get(&3), Some(&true));
        assert_eq!(p.bounded_at.get(&3), Some(&true));
        assert!(p.property_p);
        assert!(!p.is_torsion && !p.is_torsion_free && !p.is_elementary);
    }
}
