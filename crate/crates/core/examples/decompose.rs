//! Splits groups as elementary ⊕ Bassian, or reports the failed condition.

use abtaxon::classifier::extract_elementary_plus_bassian;
use abtaxon::{parse_group_expr, render};

fn main() {
    for text in ["Z(2)^w + Z(2^3)^2 + Z", "Z(5)^w1 + TF(2;5) + Q", "B(3)", "Z^w", "Z(2^inf) + Z(2)"] {
        let g = parse_group_expr(text).unwrap();
        match extract_elementary_plus_bassian(&g) {
            Ok((e, h)) => println!("{text}  =  [{}] + [{}]", render(&e), render(&h)),
            Err(e) => println!("{text}  fails: {e}"),
        }
    }
}
