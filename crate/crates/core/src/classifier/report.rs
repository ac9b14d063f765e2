use serde::Serialize;

use super::{
    is_bassian, is_generalized_bassian, is_hereditarily_bassian, is_hereditarily_hopfian,
    is_nearly_bassian, is_nearly_generalized_bassian_with, is_super_bassian, Strictness, Verdict,
};
use crate::group::GroupExpr;
use crate::invariants::{invariant_profile, InvariantProfile};

/// Every predicate's verdict, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictTable {
    pub bassian: Verdict,
    pub hereditarily_bassian: Verdict,
    pub hereditarily_hopfian: Verdict,
    pub nearly_bassian: Verdict,
    pub super_bassian: Verdict,
    pub generalized_bassian: Verdict,
    pub nearly_generalized_bassian: Verdict,
}

impl VerdictTable {
    pub const NAMES: [&'static str; 7] = [
        "bassian",
        "hereditarilyBassian",
        "hereditarilyHopfian",
        "nearlyBassian",
        "superBassian",
        "generalizedBassian",
        "nearlyGeneralizedBassian",
    ];

    /// `(name, verdict)` pairs in output order.
    pub fn entries(&self) -> [(&'static str, &Verdict); 7] {
        let v = [
            &self.bassian,
            &self.hereditarily_bassian,
            &self.hereditarily_hopfian,
            &self.nearly_bassian,
            &self.super_bassian,
            &self.generalized_bassian,
            &self.nearly_generalized_bassian,
        ];
        std::array::from_fn(|i| (Self::NAMES[i], v[i]))
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.entries().into_iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub invariants: InvariantProfile,
    pub verdicts: VerdictTable,
}

pub fn explain(g: &GroupExpr, strictness: Strictness) -> ClassificationReport {
    ClassificationReport {
        invariants: invariant_profile(g),
        verdicts: VerdictTable {
            bassian: is_bassian(g),
            hereditarily_bassian: is_hereditarily_bassian(g),
            hereditarily_hopfian: is_hereditarily_hopfian(g),
            nearly_bassian: is_nearly_bassian(g),
            super_bassian: is_super_bassian(g),
            generalized_bassian: is_generalized_bassian(g),
            nearly_generalized_bassian: is_nearly_generalized_bassian_with(g, strictness),
        },
    }
}
