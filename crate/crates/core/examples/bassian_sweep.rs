//! For each finite group G and subgroup H: G embeds in G/H iff H = 0.
//!
//! `cargo run --release --example bassian_sweep -- 200`

use abtaxon::oracle::{bassian_sweep, default_budget};

fn main() {
    let max_order = std::env::args().nth(1).map_or(64, |s| s.parse().expect("order"));
    let s = bassian_sweep(max_order, default_budget()).expect("within budget");
    println!(
        "{} groups, {} subgroups, {} counterexamples, {:.2}s",
        s.cases,
        s.checks,
        s.counterexamples.len(),
        s.elapsed.as_secs_f64()
    );
}
