//! Bundled reference classifications, checked by `classify --corpus`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::classifier::{explain, Citation, Strictness, VerdictValue};
use crate::dsl::parse_group_expr;

const CANONICAL: &str = include_str!("../corpus/canonical.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Expectation {
    pub value: String,
    pub citation: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusEntry {
    pub expr: String,
    pub note: String,
    #[serde(default)]
    pub property_p: Option<bool>,
    /// Predicate name (as in the verdict table) to expected verdict.
    pub expect: BTreeMap<String, Expectation>,
}

#[derive(Debug, Deserialize)]
struct CorpusFile {
    entries: Vec<CorpusEntry>,
}

/// One disagreement between an entry and the classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub expr: String,
    pub field: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} expected {}, got {}", self.expr, self.field, self.expected, self.actual)
    }
}

/// The bundled corpus. Panics if the embedded file is malformed.
pub fn canonical() -> Vec<CorpusEntry> {
    serde_json::from_str::<CorpusFile>(CANONICAL).expect("bundled corpus is valid JSON").entries
}

/// Compares every expectation of `entry` with the classifier at `strictness`.
pub fn check_entry(entry: &CorpusEntry, strictness: Strictness) -> Vec<Mismatch> {
    let mismatch = |field: &str, expected: String, actual: String| Mismatch {
        expr: entry.expr.clone(),
        field: field.to_string(),
        expected,
        actual,
    };
    let g = match parse_group_expr(&entry.expr) {
        Ok(g) => g,
        Err(e) => return vec![mismatch("parse", "a valid expression".into(), e.to_string())],
    };
    let report = explain(&g, strictness);
    let mut out = Vec::new();
    if let Some(expected) = entry.property_p {
        if report.invariants.property_p != expected {
            out.push(mismatch("propertyP", expected.to_string(), report.invariants.property_p.to_string()));
        }
    }
    for (name, exp) in &entry.expect {
        let Some(v) = report.verdicts.get(name) else {
            out.push(mismatch(name, "a known predicate".into(), "no such predicate".into()));
            continue;
        };
        if Citation::from_id(&exp.citation).is_none() {
            out.push(mismatch(name, "a registered citation".into(), exp.citation.clone()));
        }
        let actual = format!("{} {}", v.value, v.citation);
        if actual != format!("{} {}", exp.value, exp.citation) {
            out.push(mismatch(name, format!("{} {}", exp.value, exp.citation), actual));
        }
    }
    out
}

pub fn check_all(strictness: Strictness) -> Vec<Mismatch> {
    canonical().iter().flat_map(|e| check_entry(e, strictness)).collect()
}

/// Parses a verdict value as written in the corpus.
pub fn parse_value(s: &str) -> Option<VerdictValue> {
    match s {
        "Yes" => Some(VerdictValue::Yes),
        "No" => Some(VerdictValue::No),
        "Unknown" => Some(VerdictValue::Unknown),
        _ => None,
    }
}
