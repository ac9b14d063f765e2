use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use super::finite::ElementSpace;

/// A subgroup stored as its element set, with one generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    generators: Vec<usize>,
    members: FixedBitSet,
}

impl Subgroup {
    pub fn trivial(space: &ElementSpace) -> Self {
        let mut members = FixedBitSet::with_capacity(space.order());
        members.insert(0);
        Subgroup { generators: Vec::new(), members }
    }

    pub fn generated_by(space: &ElementSpace, generators: &[usize]) -> Self {
        let mut h = Self::trivial(space);
        for &g in generators {
            h = h.extend(space, g);
        }
        h
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self, space: &ElementSpace) -> Vec<Vec<u64>> {
        self.generators.iter().map(|&g| space.decode(g)).collect()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersects_nontrivially(&self, other: &Subgroup) -> bool {
        self.members.intersection(&other.members).any(|x| x != 0)
    }

    /// `<self, g>`, built coset by coset: `S + jg` until `jg` lands in `S`.
    pub fn extend(&self, space: &ElementSpace, g: usize) -> Subgroup {
        if self.members.contains(g) {
            return self.clone();
        }
        let base: Vec<usize> = self.members.ones().collect();
        let mut members = FixedBitSet::with_capacity(space.order());
        extend_members(space, &self.members, &base, g, &mut members);
        let mut generators = self.generators.clone();
        generators.push(g);
        Subgroup { generators, members }
    }
}

/// Writes `<S, g>` into `out`, where `base` lists the elements of `S`.
fn extend_members(space: &ElementSpace, s: &FixedBitSet, base: &[usize], g: usize, out: &mut FixedBitSet) {
    out.clone_from(s);
    let mut m = g;
    while !s.contains(m) {
        for &x in base {
            out.insert(space.add(x, m));
        }
        m = space.add(m, g);
    }
}

/// Outcome of a bounded subgroup search.
#[derive(Debug, Clone)]
pub struct SubgroupSearch {
    pub subgroups: Vec<Subgroup>,
    /// True if the search stopped at the subgroup count limit.
    pub truncated: bool,
}

/// All subgroups, sorted by order (ties in discovery order, which is deterministic).
pub fn enumerate_subgroups(space: &ElementSpace) -> Vec<Subgroup> {
    enumerate_subgroups_where(space, usize::MAX, |_| true).subgroups
}

/// Subgroups reachable from `0` through subgroups satisfying `keep`.
///
/// When `keep` is closed under taking subgroups this is exactly the set of
/// subgroups satisfying it. Stops after `limit` results.
pub fn enumerate_subgroups_where<F>(space: &ElementSpace, limit: usize, keep: F) -> SubgroupSearch
where
    F: Fn(&Subgroup) -> bool,
{
    let mut subgroups = Vec::new();
    let (_, truncated) = visit_subgroups_where(space, limit, keep, |h| subgroups.push(h.clone()));
    subgroups.sort_by_key(Subgroup::order);
    SubgroupSearch { subgroups, truncated }
}

/// Breadth-first walk calling `visit` on each subgroup without storing them.
/// Returns the number visited and whether `limit` cut the walk short.
pub fn visit_subgroups_where<F, V>(
    space: &ElementSpace,
    limit: usize,
    keep: F,
    mut visit: V,
) -> (usize, bool)
where
    F: Fn(&Subgroup) -> bool,
    V: FnMut(&Subgroup),
{
    let trivial = Subgroup::trivial(space);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.members.clone());
    visit(&trivial);
    let mut count = 1;
    let mut queue = VecDeque::from([trivial]);

    let mut scratch = FixedBitSet::with_capacity(space.order());
    while let Some(s) = queue.pop_front() {
        // One extension per coset of `s`: <s, g> depends only on g + s.
        let mut visited = s.members.clone();
        let base: Vec<usize> = s.members.ones().collect();
        for g in 0..space.order() {
            if visited.contains(g) {
                continue;
            }
            for &x in &base {
                visited.insert(space.add(g, x));
            }
            extend_members(space, &s.members, &base, g, &mut scratch);
            if seen.contains(&scratch) {
                continue;
            }
            seen.insert(scratch.clone());
            let mut generators = s.generators.clone();
            generators.push(g);
            let t = Subgroup { generators, members: scratch.clone() };
            if !keep(&t) {
                continue;
            }
            if count >= limit {
                return (count, true);
            }
            visit(&t);
            count += 1;
            queue.push_back(t);
        }
    }
    (count, false)
}

/// `G[n] = {x : n x = 0}`.
pub fn n_torsion(space: &ElementSpace, n: u64) -> Subgroup {
    let gens: Vec<usize> =
        (0..space.order()).filter(|&x| n.is_multiple_of(space.element_order(x))).collect();
    Subgroup::generated_by(space, &gens)
}

/// `nG = {n x}`.
pub fn multiple(space: &ElementSpace, n: u64) -> Subgroup {
    let gens: Vec<usize> = (0..space.rank()).map(|i| space.scalar(n, space.generator(i))).collect();
    Subgroup::generated_by(space, &gens)
}
