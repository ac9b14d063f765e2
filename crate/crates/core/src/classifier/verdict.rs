use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictValue {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictValue::Yes => "Yes",
            VerdictValue::No => "No",
            VerdictValue::Unknown => "Unknown",
        })
    }
}

/// Identifier of the rule behind a verdict. The string forms are part of the
/// stable output vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Citation {
    /// Reduced groups: Bassian iff `r_0` and every `r_p` are finite.
    MainThmI,
    /// Non-reduced groups: Bassian iff `Q^n ⊕ R` with `n` finite and `R`
    /// reduced Bassian.
    MainThmII,
    /// Bassian iff hereditarily Hopfian.
    Prop1,
    /// Hereditarily Bassian iff Bassian.
    Cor2,
    /// Nearly Bassian iff quasi-cyclic or Bassian.
    Prop3,
    /// Torsion groups: super Bassian iff reduced Bassian.
    ThmSuperI,
    /// Torsion-free groups: super Bassian iff Bassian with (𝔓).
    ThmSuperII,
    /// Mixed groups: super Bassian iff Bassian with (𝔓).
    ThmSuperIII,
    /// Bassian groups are generalized Bassian.
    BassianGb,
    /// Generalized Bassian groups have finite torsion-free rank.
    GbFiniteRank,
    /// `Z(p^inf)` is not generalized Bassian, nor is any group with it as a
    /// summand.
    PropDivnear,
    /// Each `T_p` of a generalized Bassian group is elementary ⊕ finite.
    GbTpShape,
    /// Torsion groups with every `T_p` elementary ⊕ finite are generalized
    /// Bassian.
    Thm210,
    /// Reduced torsion-free groups of finite rank are generalized Bassian.
    PropRednear,
    /// A splitting mixed group whose torsion and torsion-free parts are
    /// reduced generalized Bassian is generalized Bassian.
    Cor212,
    /// Open: is `E ⊕ B` generalized Bassian for `E` elementary and `B`
    /// Bassian without `Z(p)` summands?
    Problem2,
    /// Nearly generalized Bassian groups are quasi-cyclic or generalized
    /// Bassian; proper subgroups of `Z(p^inf)` are finite.
    ThmChief,
    /// Subgroups of Bassian groups are Bassian, hence generalized Bassian.
    BassianHereditary,
    /// Derived: subgroups of a torsion group with every `T_p` elementary ⊕
    /// finite have the same shape.
    DerivedTorsionSubgroups,
    /// Derived: subgroups of torsion-free groups of finite rank have finite
    /// rank.
    DerivedTfSubgroups,
    /// Open: whether subgroups of generalized Bassian groups are generalized
    /// Bassian.
    HereditaryGbOpen,
}

impl Citation {
    pub const ALL: [Citation; 21] = [
        Citation::MainThmI,
        Citation::MainThmII,
        Citation::Prop1,
        Citation::Cor2,
        Citation::Prop3,
        Citation::ThmSuperI,
        Citation::ThmSuperII,
        Citation::ThmSuperIII,
        Citation::BassianGb,
        Citation::GbFiniteRank,
        Citation::PropDivnear,
        Citation::GbTpShape,
        Citation::Thm210,
        Citation::PropRednear,
        Citation::Cor212,
        Citation::Problem2,
        Citation::ThmChief,
        Citation::BassianHereditary,
        Citation::DerivedTorsionSubgroups,
        Citation::DerivedTfSubgroups,
        Citation::HereditaryGbOpen,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Citation::MainThmI => "MAIN-THM-I",
            Citation::MainThmII => "MAIN-THM-II",
            Citation::Prop1 => "PROP-1",
            Citation::Cor2 => "COR-2",
            Citation::Prop3 => "PROP-3",
            Citation::ThmSuperI => "THM-SUPER-I",
            Citation::ThmSuperII => "THM-SUPER-II",
            Citation::ThmSuperIII => "THM-SUPER-III",
            Citation::BassianGb => "BASSIAN-GB",
            Citation::GbFiniteRank => "GB-FINITE-RANK",
            Citation::PropDivnear => "PROP-DIVNEAR",
            Citation::GbTpShape => "GB-TP-SHAPE",
            Citation::Thm210 => "THM-210",
            Citation::PropRednear => "PROP-REDNEAR",
            Citation::Cor212 => "COR-212",
            Citation::Problem2 => "PROBLEM-2",
            Citation::ThmChief => "THM-CHIEF",
            Citation::BassianHereditary => "BASSIAN-HEREDITARY",
            Citation::DerivedTorsionSubgroups => "DERIVED-TORSION-SUBGROUPS",
            Citation::DerivedTfSubgroups => "DERIVED-TF-SUBGROUPS",
            Citation::HereditaryGbOpen => "HEREDITARY-GB-OPEN",
        }
    }

    pub fn from_id(id: &str) -> Option<Citation> {
        Citation::ALL.into_iter().find(|c| c.id() == id)
    }

    /// Citations of open problems; the only ones an `Unknown` may carry.
    pub fn is_open_problem(self) -> bool {
        matches!(self, Citation::Problem2 | Citation::HereditaryGbOpen)
    }

    /// Rules that go beyond the published results and can be switched off.
    pub fn is_derived(self) -> bool {
        matches!(self, Citation::DerivedTorsionSubgroups | Citation::DerivedTfSubgroups)
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Citation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: VerdictValue,
    pub citation: Citation,
    pub detail: String,
}

impl Verdict {
    pub fn new(value: VerdictValue, citation: Citation, detail: impl Into<String>) -> Verdict {
        Verdict { value, citation, detail: detail.into() }
    }

    pub fn yes(citation: Citation, detail: impl Into<String>) -> Verdict {
        Verdict::new(VerdictValue::Yes, citation, detail)
    }

    pub fn no(citation: Citation, detail: impl Into<String>) -> Verdict {
        Verdict::new(VerdictValue::No, citation, detail)
    }

    pub fn unknown(citation: Citation, detail: impl Into<String>) -> Verdict {
        debug_assert!(citation.is_open_problem());
        Verdict::new(VerdictValue::Unknown, citation, detail)
    }

    pub fn is_yes(&self) -> bool {
        self.value == VerdictValue::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == VerdictValue::No
    }

    pub fn is_unknown(&self) -> bool {
        self.value == VerdictValue::Unknown
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.value, self.citation, self.detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_are_unique() {
        let mut seen = std::collections::HashSet::new();
        for c in Citation::ALL {
            assert_eq!(Citation::from_id(c.id()), Some(c));
            assert!(seen.insert(c.id()));
        }
        assert_eq!(Citation::from_id("PROBLEM-9"), None);
    }
}
