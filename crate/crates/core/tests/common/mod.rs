//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use abtaxon::{Atom, Cardinal, GroupExpr};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_cardinal(rng: &mut impl Rng) -> Cardinal {
    match rng.random_range(0..10) {
        0..=5 => Cardinal::Finite(rng.random_range(1..=4)),
        6 | 7 => Cardinal::Aleph(0),
        8 => Cardinal::Aleph(1),
        _ => Cardinal::Finite(rng.random_range(5..=40)),
    }
}

pub fn random_atom(rng: &mut impl Rng) -> Atom {
    let p = PRIMES[rng.random_range(0..PRIMES.len())];
    match rng.random_range(0..12) {
        0..=3 => Atom::Cyclic { p, k: rng.random_range(1..=4) },
        4 => Atom::UnboundedDsc { p },
        5 | 6 => Atom::FreeZ,
        7 | 8 => {
            let rank = rng.random_range(1..=4);
            let non_free = PRIMES.iter().copied().filter(|_| rng.random_bool(0.25)).collect();
            Atom::TorsionFreeFr { rank, non_free_primes: non_free }
        }
        9 | 10 => Atom::Rational,
        _ => Atom::Prufer { p },
    }
}

/// Up to five terms, so duplicates (merged by normalization) occur often.
pub fn random_expr(rng: &mut impl Rng) -> GroupExpr {
    let n = rng.random_range(0..=5);
    let terms: Vec<(Atom, Cardinal)> =
        (0..n).map(|_| (random_atom(rng), random_cardinal(rng))).collect();
    GroupExpr::normalize(terms).expect("generated atoms are valid")
}

/// Expressions passing the necessary conditions for generalized Bassian
/// groups: finite `r_0`, no `Z(p^inf)`, every `T_p` elementary ⊕ finite.
pub fn random_gb_candidate(rng: &mut impl Rng) -> GroupExpr {
    let n = rng.random_range(0..=5);
    let mut terms = Vec::new();
    for _ in 0..n {
        let p = PRIMES[rng.random_range(0..PRIMES.len())];
        let term = match rng.random_range(0..6) {
            0 | 1 => (Atom::Cyclic { p, k: 1 }, random_cardinal(rng)),
            2 => (Atom::Cyclic { p, k: rng.random_range(2..=4) }, Cardinal::Finite(rng.random_range(1..=3))),
            3 => (Atom::FreeZ, Cardinal::Finite(rng.random_range(1..=3))),
            4 => (
                Atom::TorsionFreeFr { rank: rng.random_range(1..=3), non_free_primes: [p].into() },
                Cardinal::Finite(1),
            ),
            _ => (Atom::Rational, Cardinal::Finite(rng.random_range(1..=2))),
        };
        terms.push(term);
    }
    GroupExpr::normalize(terms).expect("generated atoms are valid")
}

/// Proptest strategy built on the seeded generator.
pub fn arb_expr() -> impl Strategy<Value = GroupExpr> {
    any::<u64>().prop_map(|seed| random_expr(&mut rng(seed)))
}

/// Random bytes, biased towards the expression alphabet.
pub fn fuzz_input(rng: &mut impl Rng) -> Vec<u8> {
    const ALPHABET: &[u8] = b"ZQBTF()^;,+0123456789winf \t\n";
    let len = rng.random_range(0..24);
    (0..len)
        .map(|_| {
            if rng.random_bool(0.8) {
                ALPHABET[rng.random_range(0..ALPHABET.len())]
            } else {
                rng.random()
            }
        })
        .collect()
}
