//! Explicit finite abelian groups `⊕ Z(p_i^k_i)` with indexed elements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntegerMatrix;
use super::snf::smith_normal_form;
use super::OracleError;
use crate::primes::factorize;

/// Direct sum of cyclic prime-power groups, factors sorted by `p`, then largest `k` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<(u64, u32)>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    /// From elementary divisors `p^k`. Each `p` must be prime and `k >= 1`.
    pub fn from_elementary_divisors(mut factors: Vec<(u64, u32)>) -> Self {
        for &(p, k) in &factors {
            assert!(crate::primes::is_prime(p) && k >= 1, "bad elementary divisor {p}^{k}");
        }
        factors.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        FiniteAbelianGroup { factors }
    }

    /// From arbitrary cyclic orders, e.g. invariant factors. Orders 0 are rejected.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut factors = Vec::new();
        for &n in orders {
            assert!(n > 0, "infinite cyclic factor in a finite group");
            for (p, k) in factorize(n) {
                factors.push((p, k));
            }
        }
        Self::from_elementary_divisors(factors)
    }

    /// `⊕ Z(p^λ_i)` for a partition `λ`.
    pub fn from_partition(p: u64, parts: &[u32]) -> Self {
        Self::from_elementary_divisors(parts.iter().filter(|&&k| k > 0).map(|&k| (p, k)).collect())
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Cyclic factor orders `p^k`, in factor order.
    pub fn moduli(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, k)| p.pow(k)).collect()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Group order, `None` on `u64` overflow.
    pub fn order(&self) -> Option<u64> {
        self.moduli().into_iter().try_fold(1u64, u64::checked_mul)
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.factors.iter().map(|&(p, _)| p).collect();
        ps.dedup();
        ps
    }

    /// Exponents of the `p`-primary part, largest first.
    pub fn partition(&self, p: u64) -> Vec<u32> {
        let mut parts: Vec<u32> =
            self.factors.iter().filter(|&&(q, _)| q == p).map(|&(_, k)| k).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self::from_elementary_divisors(factors)
    }

    /// Invariant factors `d_1 | d_2 | ... `, all greater than 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut by_prime: Vec<Vec<u64>> = self
            .primes()
            .into_iter()
            .map(|p| self.partition(p).into_iter().map(|k| p.pow(k)).collect())
            .collect();
        let len = by_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![1u64; len];
        for powers in &mut by_prime {
            // Largest powers go to the last invariant factor.
            for (i, q) in powers.iter().enumerate() {
                out[len - 1 - i] *= q;
            }
        }
        out
    }

    /// Element space with precomputed addition, refusing groups above `budget`.
    pub fn elements(&self, budget: u64) -> Result<ElementSpace, OracleError> {
        match self.order() {
            Some(n) if n <= budget => Ok(ElementSpace::new(self.clone())),
            Some(n) => Err(OracleError::BudgetExceeded { order: n.to_string(), budget }),
            None => Err(OracleError::BudgetExceeded { order: "> 2^64".into(), budget }),
        }
    }

    /// `G / <h_1, ..., h_t>` via Smith normal form of the stacked relations.
    pub fn quotient(&self, generators: &[Vec<u64>]) -> Self {
        let moduli = self.moduli();
        let r = moduli.len();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(r + generators.len());
        for (i, &m) in moduli.iter().enumerate() {
            let mut row = vec![BigInt::from(0); r];
            row[i] = BigInt::from(m);
            rows.push(row);
        }
        for h in generators {
            assert_eq!(h.len(), r, "generator length must match the group rank");
            rows.push(h.iter().map(|&x| BigInt::from(x)).collect());
        }
        if r == 0 {
            return Self::trivial();
        }
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        let orders: Vec<u64> = snf
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().expect("invariant factor of a finite group fits u64"))
            .filter(|&d| d > 1)
            .collect();
        Self::from_cyclic_orders(&orders)
    }

    /// Every abelian group of order `n`, sorted.
    pub fn all_of_order(n: u64) -> Vec<Self> {
        let mut groups = vec![Self::trivial()];
        for (p, e) in factorize(n) {
            let mut next = Vec::new();
            for g in &groups {
                for parts in partitions(e) {
                    next.push(g.direct_sum(&Self::from_partition(p, &parts)));
                }
            }
            groups = next;
        }
        groups.sort();
        groups
    }

    /// Every abelian group of order `1..=n`, by order then factors.
    pub fn all_up_to_order(n: u64) -> Vec<Self> {
        (1..=n).flat_map(Self::all_of_order).collect()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let mut i = 0;
        while i < self.factors.len() {
            let (p, k) = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&x| x == (p, k)).count();
            if i > 0 {
                f.write_str(" + ")?;
            }
            if k == 1 {
                write!(f, "Z({p})")?;
            } else {
                write!(f, "Z({p}^{k})")?;
            }
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Partitions of `n` as non-increasing part lists, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Conjugate partition: `λ'_j = #{i : λ_i >= j}` for `j = 1..=λ_1`.
pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let top = parts.iter().copied().max().unwrap_or(0);
    (1..=top).map(|j| parts.iter().filter(|&&k| k >= j).count() as u32).collect()
}

/// Elements of a finite group indexed `0..order` in mixed radix, last factor fastest.
///
/// Addition is a lookup table, so construction is quadratic in the order.
#[derive(Debug, Clone)]
pub struct ElementSpace {
    group: FiniteAbelianGroup,
    moduli: Vec<u64>,
    strides: Vec<usize>,
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    element_orders: Vec<u64>,
}

impl ElementSpace {
    fn new(group: FiniteAbelianGroup) -> Self {
        let moduli = group.moduli();
        let mut strides = vec![1usize; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1] as usize;
        }
        let order = moduli.iter().product::<u64>() as usize;
        let mut space = ElementSpace {
            group,
            moduli,
            strides,
            order,
            add: Vec::new(),
            neg: Vec::new(),
            element_orders: Vec::new(),
        };
        let digits: Vec<Vec<u64>> = (0..order).map(|x| space.decode(x)).collect();
        let mut add = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let idx = space
                    .moduli
                    .iter()
                    .zip(&space.strides)
                    .enumerate()
                    .map(|(i, (&m, &s))| ((digits[a][i] + digits[b][i]) % m) as usize * s)
                    .sum::<usize>();
                add[a * order + b] = idx as u32;
            }
        }
        space.neg = (0..order)
            .map(|a| {
                let d: Vec<u64> =
                    digits[a].iter().zip(&space.moduli).map(|(&x, &m)| (m - x) % m).collect();
                space.encode(&d) as u32
            })
            .collect();
        space.element_orders = digits
            .iter()
            .map(|d| {
                d.iter()
                    .zip(&space.moduli)
                    .map(|(&x, &m)| m / x.gcd(&m))
                    .fold(1u64, |acc, o| acc.lcm(&o))
            })
            .collect();
        space.add = add;
        space
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn encode(&self, v: &[u64]) -> usize {
        assert_eq!(v.len(), self.moduli.len(), "element length must match the group rank");
        v.iter()
            .zip(&self.moduli)
            .zip(&self.strides)
            .map(|((&x, &m), &s)| (x % m) as usize * s)
            .sum()
    }

    pub fn decode(&self, x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| ((x / s) as u64) % m)
            .collect()
    }

    /// Index of the `i`-th standard generator.
    pub fn generator(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn scalar(&self, n: u64, a: usize) -> usize {
        let reduced = n % self.element_orders[a];
        let mut acc = 0;
        for _ in 0..reduced {
            acc = self.add(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_orders[a]
    }

    /// Number of elements of each order, indexed by order value.
    pub fn order_statistics(&self) -> std::collections::BTreeMap<u64, usize> {
        let mut stats = std::collections::BTreeMap::new();
        for &o in &self.element_orders {
            *stats.entry(o).or_insert(0) += 1;
        }
        stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn canonical_factors() {
        assert_eq!(g(&[12]).factors(), &[(2, 2), (3, 1)]);
        assert_eq!(g(&[6, 2]).factors(), &[(2, 1), (2, 1), (3, 1)]);
        assert_eq!(g(&[6, 2]).invariant_factors(), vec![2, 6]);
        assert_eq!(g(&[4, 2, 9, 3]).invariant_factors(), vec![6, 36]);
        assert_eq!(g(&[6, 2]).to_string(), "Z(2)^2 + Z(3)");
        assert_eq!(FiniteAbelianGroup::trivial().to_string(), "0");
    }

    #[test]
    fn quotient_example() {
        // (Z/4 + Z/2) / <(2, 1)> is cyclic of order 4.
        let q = g(&[4, 2]).quotient(&[vec![2, 1]]);
        assert_eq!(q, g(&[4]));
        assert_eq!(g(&[4, 2]).quotient(&[]), g(&[4, 2]));
        assert_eq!(g(&[4, 2]).quotient(&[vec![1, 0], vec![0, 1]]), FiniteAbelianGroup::trivial());
        assert_eq!(g(&[9]).quotient(&[vec![3]]), g(&[3]));
    }

    #[test]
    fn counts_of_groups() {
        let counts: Vec<usize> =
            [1, 8, 16, 32, 64, 72, 729].iter().map(|&n| FiniteAbelianGroup::all_of_order(n).len()).collect();
        // p(3)=3, p(4)=5, p(5)=7, p(6)=11; 72 = 2^3 * 3^2 gives 3 * 2.
        assert_eq!(counts, vec![1, 3, 5, 7, 11, 6, 11]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(conjugate(&[3, 1, 1]), vec![3, 1, 1]);
        assert_eq!(conjugate(&[4, 2]), vec![2, 2, 1, 1]);
    }

    #[test]
    fn element_space_arithmetic() {
        let s = g(&[4, 2]).elements(64).unwrap();
        assert_eq!(s.order(), 8);
        let a = s.encode(&[3, 1]);
        let b = s.encode(&[2, 1]);
        assert_eq!(s.decode(s.add(a, b)), vec![1, 0]);
        assert_eq!(s.decode(s.neg(a)), vec![1, 1]);
        assert_eq!(s.element_order(a), 4);
        assert_eq!(s.element_order(b), 2);
        assert_eq!(s.scalar(2, a), s.encode(&[2, 0]));
        assert_eq!(s.order_statistics().into_iter().collect::<Vec<_>>(), vec![(1, 1), (2, 3), (4, 4)]);
        for x in 0..8 {
            assert_eq!(s.encode(&s.decode(x)), x);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = g(&[2; 10]).elements(512).unwrap_err();
        assert_eq!(err, OracleError::BudgetExceeded { order: "1024".into(), budget: 512 });
    }
}
