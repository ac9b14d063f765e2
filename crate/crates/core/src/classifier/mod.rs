//! Decision procedures for the Bassian family.
//!
//! Every predicate returns a [`Verdict`] naming the rule that fired. Bassian,
//! nearly Bassian and super Bassian are completely classified and never
//! answer `Unknown`. Generalized Bassian and its "nearly" variant are only
//! partially classified; inputs outside the known results get `Unknown` with
//! the open problem they fall under.
//!
//! # Derived rules for nearly generalized Bassian groups
//!
//! Besides the dichotomy "quasi-cyclic or generalized Bassian" (a necessary
//! condition), two sufficient conditions are used, both switchable off with
//! [`Strictness::StrictPaper`]:
//!
//! * A torsion group `G` with every `T_p = E_p ⊕ F_p`, `E_p` elementary and
//!   `F_p` finite: a subgroup `X_p ≤ T_p` satisfies `pX_p ≤ pF_p`, which is
//!   finite, and `X_p` is bounded, hence a direct sum of cyclic groups. Only
//!   finitely many of those summands can have order `≥ p^2`, so `X_p` is again
//!   elementary ⊕ finite and every subgroup is generalized Bassian.
//! * A torsion-free group of finite rank: subgroups are torsion-free of no
//!   larger rank, hence generalized Bassian.

mod decompose;
mod report;
mod verdict;

pub use decompose::{extract_elementary_plus_bassian, DecompositionError};
pub use report::{explain, ClassificationReport, VerdictTable};
pub use verdict::{Citation, Verdict, VerdictValue};

use crate::group::GroupExpr;
use crate::invariants::{self, invariant_profile};

/// Which rule set the nearly generalized Bassian cascade may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Published results plus the derived sufficiency rules.
    #[default]
    Default,
    /// Published results only.
    StrictPaper,
}

pub fn is_bassian(g: &GroupExpr) -> Verdict {
    let profile = invariant_profile(g);
    let citation = if profile.is_reduced { Citation::MainThmI } else { Citation::MainThmII };

    if let Some((p, _)) = profile.prufer_ranks.iter().next() {
        return Verdict::no(
            citation,
            format!("Z({p}^inf) is a summand, so the divisible part is not a finite-dimensional Q-space"),
        );
    }
    if profile.divisible_rational_rank.is_infinite() {
        return Verdict::no(
            citation,
            format!("the divisible part Q^{} has infinite dimension", profile.divisible_rational_rank),
        );
    }
    if profile.r0.is_infinite() {
        return Verdict::no(citation, format!("r_0 = {} is infinite", profile.r0));
    }
    if let Some((p, r)) = profile.rp.iter().find(|(_, r)| r.is_infinite()) {
        return Verdict::no(citation, format!("r_{p} = {r} is infinite"));
    }
    let detail = if profile.is_reduced {
        "reduced with r_0 and every r_p finite".to_string()
    } else {
        format!(
            "Q^{} plus a reduced part with r_0 and every r_p finite",
            profile.divisible_rational_rank
        )
    };
    Verdict::yes(citation, detail)
}

fn with_citation(v: Verdict, citation: Citation, prefix: &str) -> Verdict {
    Verdict::new(v.value, citation, format!("{prefix}: {}", v.detail))
}

pub fn is_hereditarily_bassian(g: &GroupExpr) -> Verdict {
    with_citation(is_bassian(g), Citation::Cor2, "coincides with Bassian")
}

pub fn is_hereditarily_hopfian(g: &GroupExpr) -> Verdict {
    with_citation(is_bassian(g), Citation::Prop1, "coincides with Bassian")
}

pub fn is_nearly_bassian(g: &GroupExpr) -> Verdict {
    if g.is_quasi_cyclic() {
        return Verdict::yes(Citation::Prop3, "quasi-cyclic: every proper subgroup is finite");
    }
    let b = is_bassian(g);
    if b.is_yes() {
        Verdict::yes(Citation::Prop3, "Bassian, and subgroups of Bassian groups are Bassian")
    } else {
        Verdict::no(Citation::Prop3, format!("neither quasi-cyclic nor Bassian ({})", b.detail))
    }
}

pub fn is_super_bassian(g: &GroupExpr) -> Verdict {
    let b = is_bassian(g);
    if g.is_torsion() {
        return if !b.is_yes() {
            Verdict::no(Citation::ThmSuperI, format!("torsion but not Bassian ({})", b.detail))
        } else if !g.is_reduced() {
            Verdict::no(Citation::ThmSuperI, "torsion Bassian but not reduced")
        } else {
            Verdict::yes(Citation::ThmSuperI, "reduced torsion Bassian")
        };
    }
    let citation = if g.is_torsion_free() { Citation::ThmSuperII } else { Citation::ThmSuperIII };
    if !b.is_yes() {
        return Verdict::no(citation, format!("not Bassian ({})", b.detail));
    }
    let images = invariants::quasi_cyclic_image_primes(g);
    if images.is_empty() {
        Verdict::yes(citation, "Bassian with no quasi-cyclic epimorphic image")
    } else {
        Verdict::no(citation, format!("Z(p^inf) is an epimorphic image for p in {images}"))
    }
}

pub fn is_generalized_bassian(g: &GroupExpr) -> Verdict {
    if is_bassian(g).is_yes() {
        return Verdict::yes(Citation::BassianGb, "Bassian");
    }
    let profile = invariant_profile(g);
    if profile.r0.is_infinite() {
        return Verdict::no(
            Citation::GbFiniteRank,
            format!("torsion-free rank r_0 = {} is infinite", profile.r0),
        );
    }
    if let Some((p, _)) = profile.prufer_ranks.iter().next() {
        return Verdict::no(Citation::PropDivnear, format!("Z({p}^inf) is a summand"));
    }
    if let Some(p) = profile.shape_failures().next() {
        return Verdict::no(Citation::GbTpShape, format!("T_{p} is not elementary ⊕ finite"));
    }
    if profile.is_torsion {
        return Verdict::yes(Citation::Thm210, "torsion with every T_p elementary ⊕ finite");
    }
    if profile.is_torsion_free {
        return Verdict::yes(Citation::PropRednear, "torsion-free of finite rank");
    }
    if profile.is_reduced {
        let torsion = is_generalized_bassian(&g.torsion_subgroup());
        let free = is_generalized_bassian(&g.quotient_mod_torsion());
        if torsion.is_yes() && free.is_yes() {
            return Verdict::yes(
                Citation::Cor212,
                "splitting mixed; T(G) and G/T(G) are reduced generalized Bassian",
            );
        }
    }
    Verdict::unknown(
        Citation::Problem2,
        "an elementary group plus a non-reduced Bassian group; no classification is known",
    )
}

pub fn is_nearly_generalized_bassian(g: &GroupExpr) -> Verdict {
    is_nearly_generalized_bassian_with(g, Strictness::Default)
}

pub fn is_nearly_generalized_bassian_with(g: &GroupExpr, strictness: Strictness) -> Verdict {
    if g.is_quasi_cyclic() {
        return Verdict::yes(Citation::ThmChief, "quasi-cyclic: every proper subgroup is finite");
    }
    if is_bassian(g).is_yes() {
        return Verdict::yes(
            Citation::BassianHereditary,
            "Bassian, so every subgroup is Bassian and hence generalized Bassian",
        );
    }
    let gb = is_generalized_bassian(g);
    if gb.is_no() {
        return Verdict::no(
            Citation::ThmChief,
            format!("neither quasi-cyclic nor generalized Bassian ({})", gb.detail),
        );
    }
    if strictness == Strictness::Default && gb.is_yes() {
        if g.is_torsion() {
            return Verdict::yes(
                Citation::DerivedTorsionSubgroups,
                "subgroups keep every T_p elementary ⊕ finite",
            );
        }
        if g.is_torsion_free() {
            return Verdict::yes(
                Citation::DerivedTfSubgroups,
                "subgroups are torsion-free of finite rank",
            );
        }
    }
    Verdict::unknown(
        Citation::HereditaryGbOpen,
        "not known whether subgroups of generalized Bassian groups are generalized Bassian",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_group_expr;
    use VerdictValue::{No, Unknown, Yes};

    fn g(s: &str) -> GroupExpr {
        parse_group_expr(s).unwrap()
    }

    fn check(v: Verdict, value: VerdictValue, citation: Citation) {
        assert_eq!((v.value, v.citation), (value, citation), "{v}");
    }

    #[test]
    fn bassian_examples() {
        check(is_bassian(&g("Z(2^inf)")), No, Citation::MainThmII);
        check(is_bassian(&g("Q^2 + Z^3 + Z(3^2)^7")), Yes, Citation::MainThmII);
        check(is_bassian(&g("Z(2)^w")), No, Citation::MainThmI);
        check(is_bassian(&g("Q^w")), No, Citation::MainThmII);
        check(is_bassian(&g("TF(3;2) + B(5)")), No, Citation::MainThmI);
        check(is_bassian(&g("0")), Yes, Citation::MainThmI);
    }

    #[test]
    fn hereditary_aliases() {
        check(is_hereditarily_bassian(&g("Z(3^2)^5")), Yes, Citation::Cor2);
        check(is_hereditarily_bassian(&g("Z(2^inf)")), No, Citation::Cor2);
        check(is_hereditarily_hopfian(&g("Z + Z(2)^3")), Yes, Citation::Prop1);
    }

    #[test]
    fn nearly_bassian_examples() {
        check(is_nearly_bassian(&g("Z(5^inf)")), Yes, Citation::Prop3);
        check(is_nearly_bassian(&g("Z(5^inf)^2")), No, Citation::Prop3);
        check(is_nearly_bassian(&g("Z^4")), Yes, Citation::Prop3);
        check(is_nearly_bassian(&g("Z(5^inf) + Z")), No, Citation::Prop3);
    }

    #[test]
    fn super_bassian_examples() {
        check(is_super_bassian(&g("Z(2^2)^3 + Z(3)")), Yes, Citation::ThmSuperI);
        check(is_super_bassian(&g("Z^4")), Yes, Citation::ThmSuperII);
        check(is_super_bassian(&g("Q")), No, Citation::ThmSuperII);
        check(is_super_bassian(&g("TF(2;3)")), No, Citation::ThmSuperII);
        check(is_super_bassian(&g("TF(2;3) + Z(3)")), No, Citation::ThmSuperIII);
        check(is_super_bassian(&g("TF(2) + Z(3)^4")), Yes, Citation::ThmSuperIII);
        check(is_super_bassian(&g("Z(7^inf)")), No, Citation::ThmSuperI);
    }

    #[test]
    fn generalized_bassian_cascade() {
        check(is_generalized_bassian(&g("Z(2)^w + Z(2^4)^3")), Yes, Citation::Thm210);
        check(is_generalized_bassian(&g("B(3)")), No, Citation::GbTpShape);
        check(is_generalized_bassian(&g("Z + Z(2)^w")), Yes, Citation::Cor212);
        check(is_generalized_bassian(&g("Q + Z(2)^w")), Unknown, Citation::Problem2);
        check(is_generalized_bassian(&g("Z^w")), No, Citation::GbFiniteRank);
        check(is_generalized_bassian(&g("Z(3^inf) + Z(2)^w")), No, Citation::PropDivnear);
        check(is_generalized_bassian(&g("Z^2")), Yes, Citation::BassianGb);
        check(is_generalized_bassian(&g("Z(3^2)^w")), No, Citation::GbTpShape);
    }

    #[test]
    fn nearly_generalized_bassian_cascade() {
        check(is_nearly_generalized_bassian(&g("Z(7^inf)")), Yes, Citation::ThmChief);
        check(is_nearly_generalized_bassian(&g("B(2)")), No, Citation::ThmChief);
        check(is_nearly_generalized_bassian(&g("Z + Z(2)^w")), Unknown, Citation::HereditaryGbOpen);
        check(
            is_nearly_generalized_bassian(&g("Z(2)^w")),
            Yes,
            Citation::DerivedTorsionSubgroups,
        );
        check(
            is_nearly_generalized_bassian_with(&g("Z(2)^w"), Strictness::StrictPaper),
            Unknown,
            Citation::HereditaryGbOpen,
        );
        check(is_nearly_generalized_bassian(&g("Z^3")), Yes, Citation::BassianHereditary);
    }

    #[test]
    fn zero_group_is_everything() {
        let zero = GroupExpr::zero();
        for v in [
            is_bassian(&zero),
            is_hereditarily_bassian(&zero),
            is_hereditarily_hopfian(&zero),
            is_nearly_bassian(&zero),
            is_super_bassian(&zero),
            is_generalized_bassian(&zero),
            is_nearly_generalized_bassian(&zero),
        ] {
            assert!(v.is_yes(), "{v}");
        }
    }
}
