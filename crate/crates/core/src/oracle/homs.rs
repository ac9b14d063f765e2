use fixedbitset::FixedBitSet;
use num_integer::Integer;

use super::finite::{conjugate, ElementSpace, FiniteAbelianGroup};

/// `|Hom(A, B)| = ∏ gcd(a_i, b_j)` over the cyclic factors. `None` on overflow.
pub fn count_homs(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> Option<u128> {
    let mut total: u128 = 1;
    for &m in &a.moduli() {
        for &n in &b.moduli() {
            total = total.checked_mul(u128::from(m.gcd(&n)))?;
        }
    }
    Some(total)
}

/// A homomorphism given by the images of the domain's standard generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    pub images: Vec<usize>,
}

impl Hom {
    /// Value table over every domain element, extending additively from the
    /// generator images one coordinate at a time.
    pub fn table(&self, domain: &ElementSpace, codomain: &ElementSpace) -> Vec<usize> {
        let mut f = vec![0usize; domain.order()];
        for x in 1..domain.order() {
            let i = (0..domain.rank())
                .rev()
                .find(|&i| !((x / domain.stride(i)) as u64).is_multiple_of(domain.moduli()[i]))
                .expect("nonzero element has a nonzero coordinate");
            f[x] = codomain.add(f[x - domain.stride(i)], self.images[i]);
        }
        f
    }

    /// Checks `f(x + e_i) = f(x) + f(e_i)` for every `x` and generator `e_i`.
    pub fn is_homomorphism(&self, domain: &ElementSpace, codomain: &ElementSpace) -> bool {
        let f = self.table(domain, codomain);
        (0..domain.order()).all(|x| {
            (0..domain.rank()).all(|i| {
                let e = domain.generator(i);
                f[domain.add(x, e)] == codomain.add(f[x], self.images[i])
            })
        })
    }

    pub fn is_injective(&self, domain: &ElementSpace, codomain: &ElementSpace) -> bool {
        self.table(domain, codomain).iter().skip(1).all(|&y| y != 0)
    }
}

/// Odometer over all generator-image tuples respecting the generator orders.
#[derive(Debug, Clone)]
pub struct HomIter {
    candidates: Vec<Vec<usize>>,
    cursor: Vec<usize>,
    done: bool,
    total: u128,
}

impl HomIter {
    /// Exact number of homomorphisms, from the per-generator candidate counts.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn candidate_counts(&self) -> Vec<usize> {
        self.candidates.iter().map(Vec::len).collect()
    }
}

impl Iterator for HomIter {
    type Item = Hom;

    fn next(&mut self) -> Option<Hom> {
        if self.done {
            return None;
        }
        let hom = Hom {
            images: self.cursor.iter().zip(&self.candidates).map(|(&c, cs)| cs[c]).collect(),
        };
        self.done = true;
        for i in (0..self.cursor.len()).rev() {
            self.cursor[i] += 1;
            if self.cursor[i] < self.candidates[i].len() {
                self.done = false;
                break;
            }
            self.cursor[i] = 0;
        }
        Some(hom)
    }
}

/// Every homomorphism `A -> B`: generator `e_i` of order `a_i` may go to any
/// `y` with `a_i y = 0`, found by scanning `B`.
pub fn enumerate_homs(a: &ElementSpace, b: &ElementSpace) -> HomIter {
    let candidates: Vec<Vec<usize>> = a
        .moduli()
        .iter()
        .map(|&m| (0..b.order()).filter(|&y| m % b.element_order(y) == 0).collect())
        .collect();
    let total = candidates.iter().map(|c| c.len() as u128).product();
    HomIter { cursor: vec![0; candidates.len()], done: false, total, candidates }
}

/// Whether some homomorphism `A -> B` is injective, by backtracking search.
///
/// Generators are placed largest order first. A candidate image must have the
/// same order as its generator and meet the image built so far trivially, a
/// necessary condition for injectivity. A final kernel check confirms it.
pub fn exists_injection(a: &ElementSpace, b: &ElementSpace) -> bool {
    if a.order() > b.order() {
        return false;
    }
    // Injections preserve element orders, so each order class must fit.
    let sb = b.order_statistics();
    if a.order_statistics().iter().any(|(d, &n)| sb.get(d).copied().unwrap_or(0) < n) {
        return false;
    }
    let mut gens: Vec<usize> = (0..a.rank()).collect();
    gens.sort_by(|&i, &j| a.moduli()[j].cmp(&a.moduli()[i]).then(i.cmp(&j)));

    let mut image = FixedBitSet::with_capacity(b.order());
    image.insert(0);
    let mut images = vec![0usize; a.rank()];
    search(a, b, &gens, 0, &image, &mut images)
}

fn search(
    a: &ElementSpace,
    b: &ElementSpace,
    gens: &[usize],
    level: usize,
    image: &FixedBitSet,
    images: &mut Vec<usize>,
) -> bool {
    if level == gens.len() {
        return Hom { images: images.clone() }.is_injective(a, b);
    }
    let gi = gens[level];
    let m = a.moduli()[gi];
    let base: Vec<usize> = image.ones().collect();
    for y in 0..b.order() {
        if b.element_order(y) != m {
            continue;
        }
        let mut multiples = Vec::with_capacity(m as usize);
        let mut jy = y;
        let mut meets = false;
        while jy != 0 {
            if image.contains(jy) {
                meets = true;
                break;
            }
            multiples.push(jy);
            jy = b.add(jy, y);
        }
        if meets {
            continue;
        }
        let mut next = image.clone();
        for &t in &multiples {
            for &x in &base {
                next.insert(b.add(x, t));
            }
        }
        images[gi] = y;
        if search(a, b, gens, level + 1, &next, images) {
            return true;
        }
    }
    false
}

/// Embedding test by partitions: for every prime, `λ'_j(A) <= λ'_j(B)` for all `j`.
pub fn embedding_criterion(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> bool {
    a.primes().into_iter().all(|p| {
        let ca = conjugate(&a.partition(p));
        let cb = conjugate(&b.partition(p));
        ca.iter().enumerate().all(|(j, &x)| x <= cb.get(j).copied().unwrap_or(0))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_cyclic_orders(orders)
    }

    fn sp(orders: &[u64]) -> ElementSpace {
        g(orders).elements(1024).unwrap()
    }

    #[test]
    fn hom_counts() {
        assert_eq!(count_homs(&g(&[4]), &g(&[6])), Some(2));
        assert_eq!(count_homs(&g(&[2, 2]), &g(&[4])), Some(4));
        assert_eq!(count_homs(&g(&[4, 2]), &g(&[4, 2])), Some(4 * 2 * 2 * 2));
        assert_eq!(count_homs(&FiniteAbelianGroup::trivial(), &g(&[5])), Some(1));
        assert_eq!(count_homs(&g(&[3]), &g(&[4])), Some(1));
    }

    #[test]
    fn enumeration_matches_formula_and_yields_homs() {
        for (x, y) in [(&[4u64][..], &[6u64][..]), (&[2, 2], &[4]), (&[4, 2], &[8, 2]), (&[9], &[3, 3])] {
            let (a, b) = (sp(x), sp(y));
            let it = enumerate_homs(&a, &b);
            assert_eq!(Some(it.total()), count_homs(a.group(), b.group()));
            let homs: Vec<Hom> = it.collect();
            assert_eq!(Some(homs.len() as u128), count_homs(a.group(), b.group()));
            assert!(homs.iter().all(|h| h.is_homomorphism(&a, &b)));
        }
    }

    #[test]
    fn injections() {
        assert!(exists_injection(&sp(&[2]), &sp(&[4])));
        assert!(!exists_injection(&sp(&[2, 2]), &sp(&[8])));
        assert!(exists_injection(&sp(&[2, 2]), &sp(&[4, 2])));
        assert!(!exists_injection(&sp(&[4]), &sp(&[2, 2, 2])));
        assert!(exists_injection(&sp(&[3, 3]), &sp(&[9, 3])));
        assert!(exists_injection(&sp(&[1]), &sp(&[1])));
        assert!(!exists_injection(&sp(&[4, 4]), &sp(&[8, 2])));
    }

    #[test]
    fn partition_criterion() {
        assert!(embedding_criterion(&g(&[2]), &g(&[4])));
        assert!(!embedding_criterion(&g(&[2, 2]), &g(&[8])));
        assert!(!embedding_criterion(&g(&[4, 4]), &g(&[8, 2])));
        assert!(embedding_criterion(&g(&[4, 2]), &g(&[8, 4])));
        assert!(!embedding_criterion(&g(&[3]), &g(&[4])));
    }
}
