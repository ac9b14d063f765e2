use thiserror::Error;

use crate::cardinal::Cardinal;
use crate::group::{Atom, GroupExpr};
use crate::invariants::invariant_profile;

/// A necessary condition for being generalized Bassian that the input fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("torsion-free rank r_0 = {0} is not finite")]
    InfiniteTorsionFreeRank(Cardinal),
    #[error("Z({0}^inf) is a summand")]
    QuasiCyclicSummand(u64),
    #[error("T_{0} not elementary ⊕ finite")]
    PrimaryShape(u64),
}

/// Splits `g = E ⊕ H` with `E` elementary and `H` Bassian.
///
/// `E` takes every `Z(p)` term, so `H` has no cyclic summand of prime order.
/// Requires the necessary conditions for generalized Bassian groups: finite
/// `r_0`, no `Z(p^inf)` summand and every `T_p` elementary ⊕ finite.
pub fn extract_elementary_plus_bassian(
    g: &GroupExpr,
) -> Result<(GroupExpr, GroupExpr), DecompositionError> {
    let profile = invariant_profile(g);
    if profile.r0.is_infinite() {
        return Err(DecompositionError::InfiniteTorsionFreeRank(profile.r0));
    }
    if let Some(&p) = profile.prufer_ranks.keys().next() {
        return Err(DecompositionError::QuasiCyclicSummand(p));
    }
    if let Some(p) = profile.shape_failures().next() {
        return Err(DecompositionError::PrimaryShape(p));
    }
    let is_order_p = |a: &Atom| matches!(a, Atom::Cyclic { k: 1, .. });
    Ok((g.filter(is_order_p), g.filter(|a| !is_order_p(a))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::is_bassian;
    use crate::dsl::{parse_group_expr, render};

    fn split(s: &str) -> Result<(String, String), DecompositionError> {
        extract_elementary_plus_bassian(&parse_group_expr(s).unwrap())
            .map(|(e, h)| (render(&e), render(&h)))
    }

    #[test]
    fn splits_off_elementary_part() {
        assert_eq!(
            split("Z(2)^w + Z(2^3)^2 + Z"),
            Ok(("Z(2)^w".into(), "Z(2^3)^2 + Z".into()))
        );
        assert_eq!(split("Z(3)^2 + Z(3^2)"), Ok(("Z(3)^2".into(), "Z(3^2)".into())));
        assert_eq!(split("0"), Ok(("0".into(), "0".into())));
        assert_eq!(split("Q + Z(5)^w1"), Ok(("Z(5)^w1".into(), "Q".into())));
    }

    #[test]
    fn bassian_part_is_bassian() {
        let g = parse_group_expr("Z(2)^w + Z(3^4)^2 + TF(2;5) + Q^3").unwrap();
        let (_, h) = extract_elementary_plus_bassian(&g).unwrap();
        assert!(is_bassian(&h).is_yes());
    }

    #[test]
    fn reports_failed_condition() {
        assert_eq!(split("B(3)"), Err(DecompositionError::PrimaryShape(3)));
        assert_eq!(
            DecompositionError::PrimaryShape(3).to_string(),
            "T_3 not elementary ⊕ finite"
        );
        assert_eq!(split("Z^w"), Err(DecompositionError::InfiniteTorsionFreeRank(Cardinal::ALEPH_0)));
        assert_eq!(split("Z(2^inf) + Z(2)"), Err(DecompositionError::QuasiCyclicSummand(2)));
        assert_eq!(split("Z(3^2)^w"), Err(DecompositionError::PrimaryShape(3)));
    }
}
