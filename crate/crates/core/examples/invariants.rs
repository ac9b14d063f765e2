//! Cardinal invariants and structural flags of a group expression.

use abtaxon::invariants::{invariant_profile, r0, rp};
use abtaxon::parse_group_expr;

fn main() {
    let g = parse_group_expr("Z(2)^w + Z(2^3)^2 + Z(3^inf) + TF(2;5) + Q").unwrap();
    println!("r0 = {}", r0(&g));
    for p in [2, 3, 5] {
        println!("r{p} = {}", rp(&g, p).unwrap());
    }
    let profile = invariant_profile(&g);
    println!("{}", serde_json::to_string_pretty(&profile).unwrap());
}
