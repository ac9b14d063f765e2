//! Runs the bundled reference corpus.

use abtaxon::corpus::{canonical, check_entry};
use abtaxon::Strictness;

fn main() {
    let mut mismatches = 0;
    for entry in canonical() {
        let m = check_entry(&entry, Strictness::Default);
        println!("{:<6} {:<28} {}", if m.is_empty() { "ok" } else { "FAIL" }, entry.expr, entry.note);
        for x in &m {
            println!("       {x}");
        }
        mismatches += m.len();
    }
    println!("{mismatches} mismatches");
}
