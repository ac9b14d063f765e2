//! When does one finite p-group embed in another? Search versus the
//! partition criterion.

use abtaxon::oracle::{embedding_criterion, embedding_sweep, exists_injection, FiniteAbelianGroup};

fn main() {
    let pairs = [([4u64, 4].as_slice(), [16u64, 2].as_slice()), (&[4, 2], &[8, 2]), (&[2, 2, 2], &[8, 4])];
    for (a, b) in pairs {
        let (a, b) = (FiniteAbelianGroup::from_cyclic_orders(a), FiniteAbelianGroup::from_cyclic_orders(b));
        let found = exists_injection(&a.elements(512).unwrap(), &b.elements(512).unwrap());
        println!("{a} -> {b}: search {found}, criterion {}", embedding_criterion(&a, &b));
    }
    let s = embedding_sweep(2, 5, 512).unwrap();
    println!("2-groups of order <= 32: {} pairs, {} mismatches", s.cases, s.counterexamples.len());
}
