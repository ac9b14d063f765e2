//! The symbolic universe: atoms, formal direct sums and their structural parts.
//!
//! Every representable group is a direct sum of atoms, so the torsion
//! subgroup is always a summand and `G/T(G)` is the torsion-free part.
//! Genuinely mixed (non-splitting) groups are outside the model.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::cardinal::Cardinal;
use crate::primes;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid atom {atom}: {reason}")]
    InvalidAtom { atom: String, reason: String },
    #[error("{0} is not prime ({hint})", hint = primes::describe_factorization(*.0))]
    NotPrime(u64),
}

/// Building block of a group expression.
///
/// The variant order is the canonical order of terms: the reduced atoms
/// (torsion first, then torsion-free) followed by the divisible ones, so a
/// canonical expression reads as `R ⊕ D`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `Z(p^k)`, cyclic of order `p^k`.
    Cyclic { p: u64, k: u32 },
    /// `B(p)`: the direct sum of `Z(p^k)` over all `k ≥ 1`, one summand each.
    UnboundedDsc { p: u64 },
    /// `Z`.
    FreeZ,
    /// Reduced torsion-free group of finite rank whose localization at `p`
    /// fails to be free exactly for `p` in `non_free_primes`.
    TorsionFreeFr { rank: u32, non_free_primes: BTreeSet<u64> },
    /// `Q`.
    Rational,
    /// `Z(p^inf)`.
    Prufer { p: u64 },
}

impl Atom {
    pub fn cyclic(p: u64, k: u32) -> Result<Atom, ModelError> {
        Atom::Cyclic { p, k }.validated()
    }

    pub fn prufer(p: u64) -> Result<Atom, ModelError> {
        Atom::Prufer { p }.validated()
    }

    pub fn unbounded(p: u64) -> Result<Atom, ModelError> {
        Atom::UnboundedDsc { p }.validated()
    }

    pub fn torsion_free(
        rank: u32,
        non_free_primes: impl IntoIterator<Item = u64>,
    ) -> Result<Atom, ModelError> {
        Atom::TorsionFreeFr { rank, non_free_primes: non_free_primes.into_iter().collect() }
            .validated()
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        match self {
            Atom::Cyclic { p, k } => {
                check_prime(*p)?;
                if *k == 0 {
                    return Err(self.invalid("cyclic exponent must be at least 1"));
                }
            }
            Atom::Prufer { p } | Atom::UnboundedDsc { p } => check_prime(*p)?,
            Atom::TorsionFreeFr { rank, non_free_primes } => {
                if *rank == 0 {
                    return Err(self.invalid("rank must be at least 1"));
                }
                for &p in non_free_primes {
                    check_prime(p)?;
                }
            }
            Atom::FreeZ | Atom::Rational => {}
        }
        Ok(())
    }

    fn validated(self) -> Result<Atom, ModelError> {
        self.validate()?;
        Ok(self)
    }

    fn invalid(&self, reason: &str) -> ModelError {
        ModelError::InvalidAtom { atom: self.to_string(), reason: reason.to_string() }
    }

    pub fn is_torsion(&self) -> bool {
        matches!(self, Atom::Cyclic { .. } | Atom::Prufer { .. } | Atom::UnboundedDsc { .. })
    }

    pub fn is_torsion_free(&self) -> bool {
        !self.is_torsion()
    }

    pub fn is_divisible(&self) -> bool {
        matches!(self, Atom::Rational | Atom::Prufer { .. })
    }

    /// The prime of a torsion atom.
    pub fn prime(&self) -> Option<u64> {
        match self {
            Atom::Cyclic { p, .. } | Atom::Prufer { p } | Atom::UnboundedDsc { p } => Some(*p),
            _ => None,
        }
    }

    /// Torsion-free rank of a single copy of the atom.
    pub fn torsion_free_rank(&self) -> u64 {
        match self {
            Atom::FreeZ | Atom::Rational => 1,
            Atom::TorsionFreeFr { rank, .. } => u64::from(*rank),
            _ => 0,
        }
    }
}

fn check_prime(p: u64) -> Result<(), ModelError> {
    if primes::is_prime(p) {
        Ok(())
    } else {
        Err(ModelError::NotPrime(p))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::FreeZ => f.write_str("Z"),
            Atom::Rational => f.write_str("Q"),
            Atom::Cyclic { p, k: 1 } => write!(f, "Z({p})"),
            Atom::Cyclic { p, k } => write!(f, "Z({p}^{k})"),
            Atom::Prufer { p } => write!(f, "Z({p}^inf)"),
            Atom::UnboundedDsc { p } => write!(f, "B({p})"),
            Atom::TorsionFreeFr { rank, non_free_primes } => {
                write!(f, "TF({rank}")?;
                for (i, p) in non_free_primes.iter().enumerate() {
                    f.write_str(if i == 0 { ";" } else { "," })?;
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A normalized formal direct sum `⊕ atom^multiplicity`.
///
/// Terms are kept sorted by atom, atoms are pairwise distinct and no
/// multiplicity is zero, so structural equality is equality of expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupExpr {
    terms: Vec<(Atom, Cardinal)>,
}

impl GroupExpr {
    pub fn zero() -> GroupExpr {
        GroupExpr::default()
    }

    /// Merges repeated atoms by cardinal addition, drops zero multiplicities
    /// and sorts into canonical order.
    pub fn normalize(
        raw: impl IntoIterator<Item = (Atom, Cardinal)>,
    ) -> Result<GroupExpr, ModelError> {
        let mut merged: BTreeMap<Atom, Cardinal> = BTreeMap::new();
        for (atom, mult) in raw {
            atom.validate()?;
            let entry = merged.entry(atom).or_default();
            *entry = *entry + mult;
        }
        Ok(GroupExpr::from_sorted(merged))
    }

    /// A single term `atom^mult`.
    pub fn atom(atom: Atom, mult: Cardinal) -> Result<GroupExpr, ModelError> {
        GroupExpr::normalize([(atom, mult)])
    }

    fn from_sorted(merged: BTreeMap<Atom, Cardinal>) -> GroupExpr {
        GroupExpr { terms: merged.into_iter().filter(|(_, m)| !m.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Atom, Cardinal)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, atom: &Atom) -> Cardinal {
        self.terms
            .binary_search_by(|(a, _)| a.cmp(atom))
            .map(|i| self.terms[i].1)
            .unwrap_or_default()
    }

    /// Every prime mentioned anywhere in the expression, including the
    /// non-free primes of torsion-free atoms.
    pub fn primes(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for (atom, _) in &self.terms {
            match atom {
                Atom::TorsionFreeFr { non_free_primes, .. } => out.extend(non_free_primes),
                other => out.extend(other.prime()),
            }
        }
        out
    }

    /// Primes with a nonzero primary component.
    pub fn torsion_primes(&self) -> BTreeSet<u64> {
        self.terms.iter().filter_map(|(a, _)| a.prime()).collect()
    }

    pub fn direct_sum(&self, other: &GroupExpr) -> GroupExpr {
        let mut merged: BTreeMap<Atom, Cardinal> = self.terms.iter().cloned().collect();
        for (atom, mult) in &other.terms {
            let entry = merged.entry(atom.clone()).or_default();
            *entry = *entry + *mult;
        }
        GroupExpr::from_sorted(merged)
    }

    /// Keeps the terms whose atom satisfies `keep`. Any such sub-sum is a
    /// direct summand.
    pub fn filter(&self, mut keep: impl FnMut(&Atom) -> bool) -> GroupExpr {
        GroupExpr { terms: self.terms.iter().filter(|(a, _)| keep(a)).cloned().collect() }
    }

    /// `T(G)`.
    pub fn torsion_subgroup(&self) -> GroupExpr {
        self.filter(Atom::is_torsion)
    }

    /// The maximal divisible subgroup `d(G)`.
    pub fn divisible_part(&self) -> GroupExpr {
        self.filter(Atom::is_divisible)
    }

    /// A reduced complement of `d(G)`.
    pub fn reduced_part(&self) -> GroupExpr {
        self.filter(|a| !a.is_divisible())
    }

    /// `G/T(G)`, which in a split model is the torsion-free part.
    pub fn quotient_mod_torsion(&self) -> GroupExpr {
        self.filter(Atom::is_torsion_free)
    }

    /// `T_p(G)`.
    pub fn primary_component(&self, p: u64) -> GroupExpr {
        self.filter(|a| a.prime() == Some(p))
    }

    pub fn is_torsion(&self) -> bool {
        self.terms.iter().all(|(a, _)| a.is_torsion())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.terms.iter().all(|(a, _)| a.is_torsion_free())
    }

    pub fn is_mixed(&self) -> bool {
        !self.is_torsion() && !self.is_torsion_free()
    }

    pub fn is_reduced(&self) -> bool {
        self.terms.iter().all(|(a, _)| !a.is_divisible())
    }

    /// `Z(p^inf)` for a single prime, with multiplicity one.
    pub fn is_quasi_cyclic(&self) -> bool {
        matches!(self.terms.as_slice(), [(Atom::Prufer { .. }, Cardinal::Finite(1))])
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (atom, mult)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{atom}")?;
            match mult {
                Cardinal::Finite(1) => {}
                Cardinal::Finite(n) => write!(f, "^{n}")?,
                Cardinal::Aleph(0) => f.write_str("^w")?,
                Cardinal::Aleph(k) => write!(f, "^w{k}")?,
            }
        }
        Ok(())
    }
}
