//! Exact computations in explicit finite abelian groups.
//!
//! These are independent of the symbolic classifier: groups are materialized
//! as element sets and every claim is checked by search.

pub mod checks;
pub mod finite;
pub mod homs;
pub mod matrix;
pub mod snf;
pub mod subgroups;

use thiserror::Error;

pub use checks::{
    bassian_sweep, embedding_sweep, hom_count_sweep, lemma_basic_check, lemma_basic_sweep, lemma_pairs,
    oracle_bassian_check, CaseResult, LemmaMode, LemmaOutcome, SweepSummary,
};
pub use finite::{ElementSpace, FiniteAbelianGroup};
pub use homs::{count_homs, embedding_criterion, enumerate_homs, exists_injection, Hom};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SnfResult};
pub use subgroups::{enumerate_subgroups, Subgroup};

/// Largest group order materialized unless overridden.
pub const DEFAULT_MAX_ORDER: u64 = 512;

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "ABTAXON_MAX_ORDER";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("group of order {order} exceeds the budget of {budget} elements")]
    BudgetExceeded { order: String, budget: u64 },
    #[error("{0}")]
    Precondition(String),
}

/// Budget from `ABTAXON_MAX_ORDER`, else [`DEFAULT_MAX_ORDER`].
pub fn default_budget() -> u64 {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}
