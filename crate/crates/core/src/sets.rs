//! Vertex subsets as 64-bit masks, plus the set-family routines shared by the
//! ideal and hypergraph layers (antichain reduction, minimal transversals).

use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a square-free computation can address.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., 63}`; bit `i` is vertex (variable) `i`.
///
/// Ordering follows the lexicographic monomial order on characteristic
/// vectors with `x_0 > x_1 > ..`: at the first vertex where two sets differ,
/// the set containing it sorts first. For example `{0,1,2} < {0,3} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Apply a vertex relabelling given as `perm[old] = new`.
    pub fn permute(self, perm: &[usize]) -> Self {
        self.iter().fold(VertexSet::EMPTY, |s, v| s.with(perm[v]))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// Reduce a family to its inclusion-minimal members, deduplicated and sorted.
pub fn minimal_family(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// True when no member of the family contains another.
pub fn is_antichain(sets: &[VertexSet]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(*b)))
}

/// All inclusion-minimal transversals of a family, by Berge's edge-by-edge
/// expansion.
///
/// Conventions at the boundary: the empty family has the single transversal
/// `∅`; a family containing the empty set has none.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut order: Vec<VertexSet> = edges.to_vec();
    // small edges first keeps the intermediate families narrow
    order.sort_unstable_by_key(|e| (e.len(), e.0));
    let mut covers = vec![VertexSet::EMPTY];
    for e in order {
        let mut next = Vec::with_capacity(covers.len() * 2);
        let mut extend = Vec::new();
        for c in covers {
            if c.meets(e) {
                next.push(c);
            } else {
                extend.push(c);
            }
        }
        let hitting = next.len();
        for c in extend {
            for v in e.iter() {
                let cand = c.with(v);
                if !next[..hitting].iter().any(|k| k.is_subset(cand)) {
                    next.push(cand);
                }
            }
        }
        covers = minimal_family(next);
        if covers.is_empty() {
            break;
        }
    }
    covers
}

/// Binomial coefficient with saturation.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}
