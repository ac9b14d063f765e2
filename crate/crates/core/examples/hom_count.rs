//! Hom-set sizes from the gcd formula against explicit enumeration.

use abtaxon::oracle::{count_homs, enumerate_homs, hom_count_sweep, FiniteAbelianGroup};

fn main() {
    let a = FiniteAbelianGroup::from_cyclic_orders(&[4, 2]);
    let b = FiniteAbelianGroup::from_cyclic_orders(&[8, 6]);
    let (sa, sb) = (a.elements(512).unwrap(), b.elements(512).unwrap());
    println!("|Hom({a}, {b})| = {:?} by formula, {} enumerated", count_homs(&a, &b), enumerate_homs(&sa, &sb).count());

    let s = hom_count_sweep(32, 512).unwrap();
    println!("{} pairs of order <= 32, {} mismatches", s.cases, s.counterexamples.len());
}
