//! Cardinal numbers used for multiplicities and ranks.
//!
//! Only the distinction between finite values and the alephs matters to the
//! classification, so the arithmetic is the usual cardinal arithmetic
//! restricted to `ℵ_k` with `k` a machine integer: any sum or nonzero product
//! involving an aleph is the largest operand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cardinal {
    Finite(u64),
    /// `Aleph(k)` is `ℵ_k`.
    Aleph(u32),
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::Finite(0);
    pub const ONE: Cardinal = Cardinal::Finite(1);
    pub const ALEPH_0: Cardinal = Cardinal::Aleph(0);

    pub fn is_zero(self) -> bool {
        self == Cardinal::ZERO
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        !self.is_finite()
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinal::Finite(n) => Some(n),
            Cardinal::Aleph(_) => None,
        }
    }
}

impl Default for Cardinal {
    fn default() -> Self {
        Cardinal::ZERO
    }
}

impl From<u64> for Cardinal {
    fn from(n: u64) -> Self {
        Cardinal::Finite(n)
    }
}

impl Ord for Cardinal {
    fn cmp(&self, other: &Self) -> Ordering {
        use Cardinal::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Aleph(_)) => Ordering::Less,
            (Aleph(_), Finite(_)) => Ordering::Greater,
            (Aleph(a), Aleph(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Cardinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Cardinal {
    type Output = Cardinal;

    fn add(self, rhs: Cardinal) -> Cardinal {
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => {
                Cardinal::Finite(a.checked_add(b).expect("finite cardinal overflow"))
            }
            (a, b) => a.max(b),
        }
    }
}

impl Mul for Cardinal {
    type Output = Cardinal;

    fn mul(self, rhs: Cardinal) -> Cardinal {
        if self.is_zero() || rhs.is_zero() {
            return Cardinal::ZERO;
        }
        match (self, rhs) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => {
                Cardinal::Finite(a.checked_mul(b).expect("finite cardinal overflow"))
            }
            (a, b) => a.max(b),
        }
    }
}

impl std::iter::Sum for Cardinal {
    fn sum<I: Iterator<Item = Cardinal>>(iter: I) -> Cardinal {
        iter.fold(Cardinal::ZERO, Add::add)
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Aleph(k) => write!(f, "aleph{k}"),
        }
    }
}

impl Serialize for Cardinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cardinal() -> impl Strategy<Value = Cardinal> {
        prop_oneof![
            (0u64..1000).prop_map(Cardinal::Finite),
            (0u32..4).prop_map(Cardinal::Aleph),
        ]
    }

    #[test]
    fn order_puts_alephs_above_naturals() {
        assert!(Cardinal::Finite(u64::MAX) < Cardinal::Aleph(0));
        assert!(Cardinal::Aleph(0) < Cardinal::Aleph(1));
        assert!(Cardinal::Finite(3) < Cardinal::Finite(4));
    }

    #[test]
    fn aleph_absorbs_finite() {
        assert_eq!(Cardinal::ALEPH_0 + Cardinal::Finite(7), Cardinal::ALEPH_0);
        assert_eq!(Cardinal::Aleph(2) + Cardinal::Aleph(1), Cardinal::Aleph(2));
        assert_eq!(Cardinal::Finite(3) * Cardinal::ALEPH_0, Cardinal::ALEPH_0);
        assert_eq!(Cardinal::ZERO * Cardinal::Aleph(5), Cardinal::ZERO);
    }

    proptest! {
        #[test]
        fn addition_is_commutative_and_associative(a in cardinal(), b in cardinal(), c in cardinal()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a + Cardinal::ZERO, a);
        }

        #[test]
        fn addition_is_monotone(a in cardinal(), b in cardinal(), c in cardinal()) {
            if a <= b {
                prop_assert!(a + c <= b + c);
            }
            prop_assert!(a <= a + c);
        }
    }
}
