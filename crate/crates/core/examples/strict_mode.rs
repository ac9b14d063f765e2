//! Verdicts that change when only published results may be used.

use abtaxon::classifier::explain;
use abtaxon::{parse_group_expr, Strictness};

fn main() {
    for text in ["Z(2)^w", "Z(3)^w + Z(3^2)^4", "TF(2;3)", "Z^2", "Z(5^inf)"] {
        let g = parse_group_expr(text).unwrap();
        let default = explain(&g, Strictness::Default).verdicts.nearly_generalized_bassian;
        let strict = explain(&g, Strictness::StrictPaper).verdicts.nearly_generalized_bassian;
        println!(
            "{text:<20} default {} ({}), strict {} ({})",
            default.value, default.citation, strict.value, strict.citation
        );
    }
}
