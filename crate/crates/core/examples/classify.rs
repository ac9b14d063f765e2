//! Classifies a few groups and prints each verdict with its citation.
//!
//! `cargo run --example classify -- "Z(2)^w + Q^2"`

use abtaxon::classifier::explain;
use abtaxon::{parse_group_expr, render, Strictness};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec!["Z(3^inf)".to_string(), "Q^2 + Z^3 + Z(3^2)^7".into(), "Q + Z(2)^w".into(), "B(5)".into()]
    } else {
        args
    };
    for text in inputs {
        let g = match parse_group_expr(&text) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        println!("{}", render(&g));
        for (name, v) in explain(&g, Strictness::Default).verdicts.entries() {
            println!("  {name:<26} {:<8} {}", v.value.to_string(), v.citation);
        }
    }
}
