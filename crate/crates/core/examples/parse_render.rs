//! Parsing normalizes; rendering gives the canonical form back.

use abtaxon::cli::render_parse_error;
use abtaxon::{parse_group_expr, render};

fn main() {
    for text in ["Z + Z", "Q ⊕ Z(2^∞) ⊕ Z(2^∞)", "Z(2^3)^w + Z^3 + Q", "TF(3; 5, 2)", "0"] {
        let g = parse_group_expr(text).unwrap();
        println!("{text:<24} -> {}", render(&g));
        for (atom, m) in g.terms() {
            println!("    {atom:?} x {m}");
        }
    }
    for text in ["Z(6)", "TF(0)", "Q^"] {
        let e = parse_group_expr(text).unwrap_err();
        println!("{}", render_parse_error(text, &e));
    }
}
