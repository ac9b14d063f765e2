//! Smith normal form of a relation matrix, and the quotient it describes.

use abtaxon::oracle::{smith_normal_form, FiniteAbelianGroup, IntegerMatrix};

fn main() {
    let a = IntegerMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("A =\n{a}");
    println!("S = U A V =\n{}", snf.s);
    println!("invariant factors: {:?}", snf.invariant_factors());
    assert_eq!(&(&snf.u * &a) * &snf.v, snf.s);

    let g = FiniteAbelianGroup::from_cyclic_orders(&[4, 2]);
    let q = g.quotient(&[vec![2, 1]]);
    println!("{g} / <(2,1)> = {q}");
}
