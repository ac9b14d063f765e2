//! Symbolic classification of abelian groups with respect to the Bassian
//! family of properties.
//!
//! A group is written as a finite formal direct sum of atoms (`Z`, `Q`,
//! `Z(p^k)`, `Z(p^inf)`, the unbounded sum `B(p)` of `Z(p^k)` over all `k`, and
//! reduced torsion-free groups of finite rank `TF(n; S)`), each carrying a
//! cardinal multiplicity. From that description the crate computes rank
//! invariants and decides, with a cited rule for every answer:
//!
//! * Bassian, hereditarily Bassian, hereditarily Hopfian;
//! * nearly Bassian and super Bassian;
//! * generalized Bassian and nearly generalized Bassian (tri-valued, since the
//!   general classification is open);
//!
//! and extracts the `E ⊕ H` split into an elementary group and a Bassian
//! group.
//!
//! The [`oracle`] module checks the underlying definitions by brute force on
//! finite abelian groups: Smith normal form over exact integers, subgroup
//! enumeration, quotients, homomorphism enumeration and injection search.
//!
//! ```
//! use abtaxon::{classifier, dsl};
//!
//! let g = dsl::parse_group_expr("Z(2)^w + Z(2^3)^2 + Z").unwrap();
//! assert!(classifier::is_generalized_bassian(&g).is_yes());
//!
//! let (e, h) = classifier::extract_elementary_plus_bassian(&g).unwrap();
//! assert_eq!(dsl::render(&e), "Z(2)^w");
//! assert_eq!(dsl::render(&h), "Z(2^3)^2 + Z");
//! ```

pub mod cardinal;
pub mod classifier;
pub mod cli;
pub mod corpus;
pub mod dsl;
pub mod group;
pub mod invariants;
pub mod oracle;
pub mod primes;

pub use cardinal::Cardinal;
pub use classifier::{Citation, ClassificationReport, Strictness, Verdict, VerdictValue};
pub use dsl::{parse_group_expr, render, ParseError};
pub use group::{Atom, GroupExpr, ModelError};
pub use invariants::{InvariantProfile, PrimeSet};
