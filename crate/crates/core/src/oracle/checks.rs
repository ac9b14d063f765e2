//! Exhaustive and sampled checks of the finite theory, plus sweeps over families.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::finite::{partitions, FiniteAbelianGroup};
use super::homs::{count_homs, embedding_criterion, enumerate_homs, exists_injection};
use super::subgroups::{multiple, n_torsion, visit_subgroups_where, Subgroup};
use super::OracleError;

/// Homomorphisms are walked one by one up to this many; above it the
/// enumerator's exact length is compared instead.
pub const HOM_WALK_CAP: u128 = 4096;

/// Subgroup count beyond which the basic-lemma check switches to sampling.
pub const LEMMA_EXHAUSTIVE_LIMIT: usize = 1 << 20;

/// Aggregate result of a sweep. Counterexamples are sorted, so the result
/// does not depend on scheduling.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepSummary {
    pub name: String,
    pub cases: u64,
    pub checks: u64,
    pub counterexamples: Vec<String>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn collect(name: &str, start: Instant, results: Vec<Result<CaseResult, OracleError>>) -> Result<Self, OracleError> {
        let mut summary = SweepSummary {
            name: name.to_string(),
            cases: 0,
            checks: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        };
        for r in results {
            let r = r?;
            summary.cases += 1;
            summary.checks += r.checks;
            summary.counterexamples.extend(r.counterexamples);
        }
        summary.counterexamples.sort();
        summary.elapsed = start.elapsed();
        Ok(summary)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseResult {
    pub checks: u64,
    pub counterexamples: Vec<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every subgroup `H` of `G`: some injection `G -> G/H` exists iff `H = 0`.
/// Also checks `|G/H| |H| = |G|`.
pub fn oracle_bassian_check(g: &FiniteAbelianGroup, budget: u64) -> Result<CaseResult, OracleError> {
    let space = g.elements(budget)?;
    let mut result = CaseResult::default();
    visit_subgroups_where(&space, usize::MAX, |_| true, |h| {
        result.checks += 1;
        let q = g.quotient(&h.generators(&space));
        let q_order = q.order().expect("quotient of a finite group is finite");
        if q_order as usize * h.order() != space.order() {
            result.counterexamples.push(format!("{g}: |G/H| |H| != |G| for H = <{:?}>", h.generators(&space)));
            return;
        }
        let q_space = q.elements(budget).expect("quotient is no larger than G");
        if exists_injection(&space, &q_space) != h.is_trivial() {
            result.counterexamples.push(format!("{g}: H = <{:?}>, G/H = {q}", h.generators(&space)));
        }
    });
    Ok(result)
}

pub fn bassian_sweep(max_order: u64, budget: u64) -> Result<SweepSummary, OracleError> {
    let start = Instant::now();
    let groups = FiniteAbelianGroup::all_up_to_order(max_order);
    let results = groups.par_iter().map(|g| oracle_bassian_check(g, budget)).collect();
    SweepSummary::collect("bassian-sweep", start, results)
}

/// The gcd formula against enumeration. Small hom sets are walked and each
/// map checked; larger ones compare the enumerator's exact length.
pub fn hom_count_check(
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    budget: u64,
) -> Result<CaseResult, OracleError> {
    let (sa, sb) = (a.elements(budget)?, b.elements(budget)?);
    let formula = count_homs(a, b);
    let homs = enumerate_homs(&sa, &sb);
    let enumerated = if homs.total() <= HOM_WALK_CAP {
        let mut n = 0u128;
        for h in homs {
            if !h.is_homomorphism(&sa, &sb) {
                return Ok(CaseResult {
                    checks: 1,
                    counterexamples: vec![format!("{a} -> {b}: images {:?} not additive", h.images)],
                });
            }
            n += 1;
        }
        n
    } else {
        homs.total()
    };
    let counterexamples = if formula == Some(enumerated) {
        Vec::new()
    } else {
        vec![format!("{a} -> {b}: formula {formula:?}, enumerated {enumerated}")]
    };
    Ok(CaseResult { checks: 1, counterexamples })
}

pub fn hom_count_sweep(max_order: u64, budget: u64) -> Result<SweepSummary, OracleError> {
    let start = Instant::now();
    let groups = FiniteAbelianGroup::all_up_to_order(max_order);
    let pairs: Vec<(&FiniteAbelianGroup, &FiniteAbelianGroup)> =
        groups.iter().flat_map(|a| groups.iter().map(move |b| (a, b))).collect();
    let results = pairs.par_iter().map(|(a, b)| hom_count_check(a, b, budget)).collect();
    SweepSummary::collect("hom-count", start, results)
}

/// Backtracking injection search against the partition criterion.
pub fn embedding_check(
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    budget: u64,
) -> Result<CaseResult, OracleError> {
    let searched = exists_injection(&a.elements(budget)?, &b.elements(budget)?);
    let criterion = embedding_criterion(a, b);
    let counterexamples = if searched == criterion {
        Vec::new()
    } else {
        vec![format!("{a} -> {b}: search {searched}, criterion {criterion}")]
    };
    Ok(CaseResult { checks: 1, counterexamples })
}

/// All `p`-groups of order at most `p^max_exp`.
pub fn p_groups(p: u64, max_exp: u32) -> Vec<FiniteAbelianGroup> {
    (0..=max_exp)
        .flat_map(|e| partitions(e).into_iter().map(move |parts| FiniteAbelianGroup::from_partition(p, &parts)))
        .collect()
}

pub fn embedding_sweep(p: u64, max_exp: u32, budget: u64) -> Result<SweepSummary, OracleError> {
    if !crate::primes::is_prime(p) {
        return Err(OracleError::Precondition(crate::primes::describe_factorization(p)));
    }
    let start = Instant::now();
    let groups = p_groups(p, max_exp);
    let pairs: Vec<(&FiniteAbelianGroup, &FiniteAbelianGroup)> =
        groups.iter().flat_map(|a| groups.iter().map(move |b| (a, b))).collect();
    let results = pairs.par_iter().map(|(a, b)| embedding_check(a, b, budget)).collect();
    SweepSummary::collect("embedding-equiv", start, results)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum LemmaMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub mode: LemmaMode,
    pub result: CaseResult,
}

/// With `B` elementary and `C` a `p`-group: every subgroup `A` of `B ⊕ C`
/// with `A ∩ pC = 0` lies in `(B ⊕ C)[p]`.
///
/// Since `pB = 0`, `pC = p(B ⊕ C)`. The subgroups meeting `pC` trivially are
/// closed under taking subgroups, so the restricted search is exhaustive. If
/// there are more than [`LEMMA_EXHAUSTIVE_LIMIT`], `trials` random subgroups
/// on up to three generators are drawn from a ChaCha stream seeded by `seed`.
pub fn lemma_basic_check(
    p: u64,
    b: &FiniteAbelianGroup,
    c: &FiniteAbelianGroup,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<LemmaOutcome, OracleError> {
    if !crate::primes::is_prime(p) {
        return Err(OracleError::Precondition(crate::primes::describe_factorization(p)));
    }
    if b.factors().iter().any(|&f| f != (p, 1)) {
        return Err(OracleError::Precondition(format!("{b} is not an elementary {p}-group")));
    }
    if c.factors().iter().any(|&(q, _)| q != p) {
        return Err(OracleError::Precondition(format!("{c} is not a {p}-group")));
    }
    let g = b.direct_sum(c);
    let space = g.elements(budget)?;
    let p_c = multiple(&space, p);
    let socle = n_torsion(&space, p);
    let mut result = CaseResult::default();
    let mut judge = |a: &Subgroup| {
        if a.intersects_nontrivially(&p_c) {
            return;
        }
        result.checks += 1;
        if !a.is_subset(&socle) {
            result.counterexamples.push(format!("B = {b}, C = {c}: A = <{:?}>", a.generators(&space)));
        }
    };

    let (_, truncated) = visit_subgroups_where(
        &space,
        LEMMA_EXHAUSTIVE_LIMIT,
        |a| !a.intersects_nontrivially(&p_c),
        &mut judge,
    );
    if !truncated {
        return Ok(LemmaOutcome { mode: LemmaMode::Exhaustive, result });
    }
    result = CaseResult::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let k = rng.random_range(1..=3);
        let gens: Vec<usize> = (0..k).map(|_| rng.random_range(0..space.order())).collect();
        let a = Subgroup::generated_by(&space, &gens);
        if a.intersects_nontrivially(&p_c) {
            continue;
        }
        result.checks += 1;
        if !a.is_subset(&socle) {
            result.counterexamples.push(format!("B = {b}, C = {c}: A = <{gens:?}>"));
        }
    }
    Ok(LemmaOutcome { mode: LemmaMode::Sampled, result })
}

/// The basic-lemma check over [`lemma_pairs`].
pub fn lemma_basic_sweep(
    p: u64,
    max_order: u64,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<SweepSummary, OracleError> {
    if !crate::primes::is_prime(p) {
        return Err(OracleError::Precondition(crate::primes::describe_factorization(p)));
    }
    let start = Instant::now();
    let pairs = lemma_pairs(p, max_order);
    let results = pairs
        .par_iter()
        .enumerate()
        .map(|(i, (b, c))| {
            lemma_basic_check(p, b, c, trials, seed.wrapping_add(i as u64), budget).map(|o| o.result)
        })
        .collect();
    SweepSummary::collect("lemma-basic", start, results)
}

/// Every `(B, C)` with `B` elementary, `C` a `p`-group and `|B ⊕ C| <= max_order`,
/// including trivial `B` and `C`.
pub fn lemma_pairs(p: u64, max_order: u64) -> Vec<(FiniteAbelianGroup, FiniteAbelianGroup)> {
    let mut max_exp = 0u32;
    while p.checked_pow(max_exp + 1).is_some_and(|q| q <= max_order) {
        max_exp += 1;
    }
    let mut pairs = Vec::new();
    for e in 0..=max_exp {
        for n in 0..=e {
            for parts in partitions(e - n) {
                let b = FiniteAbelianGroup::from_partition(p, &vec![1; n as usize]);
                pairs.push((b, FiniteAbelianGroup::from_partition(p, &parts)));
            }
        }
    }
    pairs
}

/// Draws `count` random finite groups of order at most `max_order`.
pub fn random_groups(count: usize, max_order: u64, seed: u64) -> Vec<FiniteAbelianGroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = FiniteAbelianGroup::all_up_to_order(max_order);
    (0..count).map(|_| all[rng.random_range(0..all.len())].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn bassian_on_small_groups() {
        for orders in [&[1u64][..], &[12], &[4, 2], &[2, 2, 2], &[9, 3]] {
            let r = oracle_bassian_check(&g(orders), 512).unwrap();
            assert!(r.passed(), "{:?}", r.counterexamples);
        }
        assert_eq!(oracle_bassian_check(&g(&[4, 2]), 512).unwrap().checks, 8);
    }

    #[test]
    fn sweeps_pass_on_small_ranges() {
        assert!(bassian_sweep(32, 512).unwrap().passed());
        assert!(hom_count_sweep(16, 512).unwrap().passed());
        assert!(embedding_sweep(2, 4, 512).unwrap().passed());
        assert!(lemma_basic_sweep(3, 27, 10, 1, 512).unwrap().passed());
    }

    #[test]
    fn lemma_preconditions() {
        assert!(matches!(
            lemma_basic_check(2, &g(&[4]), &g(&[2]), 1, 0, 512),
            Err(OracleError::Precondition(_))
        ));
        assert!(matches!(
            lemma_basic_check(2, &g(&[2]), &g(&[3]), 1, 0, 512),
            Err(OracleError::Precondition(_))
        ));
        let o = lemma_basic_check(2, &g(&[2]), &g(&[4]), 1, 0, 512).unwrap();
        assert_eq!(o.mode, LemmaMode::Exhaustive);
        // Z/2 + Z/4 with pC = <(0,2)>: subgroups meeting it trivially are 0, <(1,0)>, <(1,2)>.
        assert_eq!(o.result.checks, 3);
    }

    #[test]
    fn sweep_summaries_are_order_independent() {
        let a = hom_count_sweep(8, 512).unwrap();
        let b = hom_count_sweep(8, 512).unwrap();
        assert_eq!((a.cases, a.checks), (b.cases, b.checks));
        // 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3 = 11 groups of order <= 8.
        assert_eq!(a.cases, 11 * 11);
    }
}
