//! Subgroups of B ⊕ C (B elementary) meeting pC trivially are elementary.

use abtaxon::oracle::{lemma_basic_check, lemma_basic_sweep, FiniteAbelianGroup};

fn main() {
    let b = FiniteAbelianGroup::from_partition(2, &[1, 1]);
    let c = FiniteAbelianGroup::from_partition(2, &[3, 1]);
    let o = lemma_basic_check(2, &b, &c, 1000, 0, 512).unwrap();
    println!("B = {b}, C = {c}: {:?}, {} subgroups, {} counterexamples", o.mode, o.result.checks, o.result.counterexamples.len());

    let s = lemma_basic_sweep(3, 243, 1000, 0, 512).unwrap();
    println!("p = 3, |B + C| <= 243: {} pairs, {} subgroups, {} counterexamples", s.cases, s.checks, s.counterexamples.len());
}
