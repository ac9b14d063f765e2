//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// `u * a * v = s` with `u`, `v` unimodular and `s` diagonal, nonnegative,
/// each diagonal entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }
}

/// Pivot: the entry of smallest nonzero absolute value in the trailing
/// submatrix, ties broken row-major.
fn find_pivot(s: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let e = &s[(i, j)];
            if e.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| e.abs() < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = find_pivot(&s, t) else {
                return SnfResult { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = &s[(i, t)] / &pivot;
                if !q.is_zero() {
                    let neg = -q;
                    s.add_row_multiple(i, t, &neg);
                    u.add_row_multiple(i, t, &neg);
                }
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = &s[(t, j)] / &pivot;
                if !q.is_zero() {
                    let neg = -q;
                    s.add_col_multiple(j, t, &neg);
                    v.add_col_multiple(j, t, &neg);
                }
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(&s[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, s, v }
}
