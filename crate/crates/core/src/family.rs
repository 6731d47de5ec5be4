//! Hypergraphs on a small vertex set, one per isomorphism class.
//!
//! Orderly generation: a family is canonical when its sorted edge list is the
//! lexicographic minimum over all vertex permutations. Edges are only ever
//! appended above the current largest edge, and every prefix of a canonical
//! list is canonical, so pruning non-canonical nodes loses nothing and each
//! class is produced exactly once.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::monomial::VariableContext;
use crate::sets::VertexSet;

/// Largest vertex count accepted for exhaustive enumeration.
pub const MAX_FAMILY_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub n: usize,
    pub max_edges: usize,
    pub min_edge_size: usize,
    pub max_edge_size: usize,
    /// All edges of one size.
    pub uniform: bool,
}

impl FamilySpec {
    /// Every clutter on `n` vertices with at most `max_edges` edges.
    pub fn hypergraphs(n: usize, max_edges: usize) -> Self {
        FamilySpec {
            n,
            max_edges,
            min_edge_size: 1,
            max_edge_size: n.max(1),
            uniform: false,
        }
    }

    /// Simple graphs on `n` vertices.
    pub fn graphs(n: usize) -> Self {
        FamilySpec {
            n,
            max_edges: n * n.saturating_sub(1) / 2,
            min_edge_size: 2,
            max_edge_size: 2,
            uniform: true,
        }
    }

    /// `k`-uniform clutters on `n` vertices with at most `max_edges` edges.
    pub fn uniform(n: usize, k: usize, max_edges: usize) -> Self {
        FamilySpec {
            n,
            max_edges,
            min_edge_size: k,
            max_edge_size: k,
            uniform: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n > MAX_FAMILY_VERTICES {
            return Err(Error::guard("family vertex count", MAX_FAMILY_VERTICES, self.n));
        }
        if self.min_edge_size == 0 || self.min_edge_size > self.max_edge_size {
            return Err(Error::InvalidArgument("edge size range must be within 1..=n".into()));
        }
        Ok(())
    }
}

struct PermTable {
    size: usize,
    // images[p * size + mask] = image of `mask` under permutation p
    images: Vec<u8>,
    count: usize,
}

impl PermTable {
    fn new(n: usize) -> Self {
        let size = 1usize << n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut images = Vec::new();
        let mut count = 0;
        loop {
            let start = images.len();
            images.push(0u8);
            for mask in 1..size {
                let low = mask.trailing_zeros() as usize;
                let rest = images[start + (mask & (mask - 1))];
                images.push(rest | (1 << perm[low]));
            }
            count += 1;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        PermTable { size, images, count }
    }

    fn image(&self, p: usize, mask: u64) -> VertexSet {
        VertexSet(self.images[p * self.size + mask as usize] as u64)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn is_canonical(table: &PermTable, edges: &[VertexSet], buf: &mut Vec<VertexSet>) -> bool {
    // permutation 0 is the identity
    for p in 1..table.count {
        buf.clear();
        buf.extend(edges.iter().map(|e| table.image(p, e.0)));
        buf.sort_unstable();
        if buf.as_slice() < edges {
            return false;
        }
    }
    true
}

/// The lexicographically least sorted image of `edges` under a permutation of `0..n`.
pub fn canonical_form(edges: &[VertexSet], n: usize) -> Result<Vec<VertexSet>> {
    if n > MAX_FAMILY_VERTICES {
        return Err(Error::guard("canonical form vertex count", MAX_FAMILY_VERTICES, n));
    }
    let table = PermTable::new(n);
    let mut best: Vec<VertexSet> = edges.to_vec();
    best.sort_unstable();
    let mut buf = Vec::with_capacity(edges.len());
    for p in 1..table.count {
        buf.clear();
        buf.extend(edges.iter().map(|e| table.image(p, e.0)));
        buf.sort_unstable();
        if buf < best {
            best.clone_from(&buf);
        }
    }
    Ok(best)
}

/// Visit the canonical edge list of every class in the family, the edgeless
/// one included, in generation order.
pub fn for_each_edge_list<F: FnMut(&[VertexSet])>(spec: &FamilySpec, mut visit: F) -> Result<()> {
    spec.validate()?;
    let n = spec.n;
    let table = PermTable::new(n);
    let mut candidates: Vec<VertexSet> = (1u64..(1u64 << n))
        .map(VertexSet)
        .filter(|s| (spec.min_edge_size..=spec.max_edge_size).contains(&s.len()))
        .collect();
    candidates.sort_unstable();

    struct Search<'a, F> {
        spec: &'a FamilySpec,
        table: &'a PermTable,
        candidates: &'a [VertexSet],
        edges: Vec<VertexSet>,
        buf: Vec<VertexSet>,
        visit: F,
    }

    impl<F: FnMut(&[VertexSet])> Search<'_, F> {
        fn run(&mut self, from: usize) {
            (self.visit)(&self.edges);
            if self.edges.len() >= self.spec.max_edges {
                return;
            }
            for idx in from..self.candidates.len() {
                let e = self.candidates[idx];
                if self.spec.uniform && self.edges.first().is_some_and(|f| f.len() != e.len()) {
                    continue;
                }
                if self.edges.iter().any(|f| f.is_subset(e) || e.is_subset(*f)) {
                    continue;
                }
                self.edges.push(e);
                if is_canonical(self.table, &self.edges, &mut self.buf) {
                    self.run(idx + 1);
                }
                self.edges.pop();
            }
        }
    }

    let mut search = Search {
        spec,
        table: &table,
        candidates: &candidates,
        edges: Vec::new(),
        buf: Vec::new(),
        visit: &mut visit,
    };
    search.run(0);
    Ok(())
}

pub fn edge_lists(spec: &FamilySpec) -> Result<Vec<Vec<VertexSet>>> {
    let mut out = Vec::new();
    for_each_edge_list(spec, |e| out.push(e.to_vec()))?;
    Ok(out)
}

/// The family as hypergraphs over the variables `a, b, c, ...`.
pub fn hypergraphs(spec: &FamilySpec) -> Result<Vec<Hypergraph>> {
    let ctx: Arc<VariableContext> = VariableContext::letters(spec.n)?;
    edge_lists(spec)?
        .into_iter()
        .map(|e| Hypergraph::new(ctx.clone(), e))
        .collect()
}

/// Bipartite simple graphs on `n` vertices, one per isomorphism class.
pub fn bipartite_graphs(n: usize) -> Result<Vec<Hypergraph>> {
    Ok(hypergraphs(&FamilySpec::graphs(n))?
        .into_iter()
        .filter(|h| h.is_bipartite_graph())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: FamilySpec) -> usize {
        edge_lists(&spec).unwrap().len()
    }

    #[test]
    fn graph_counts() {
        // unlabelled simple graphs on 1..=5 vertices
        let expected = [1, 2, 4, 11, 34];
        for (n, &c) in (1..=5).zip(&expected) {
            assert_eq!(count(FamilySpec::graphs(n)), c, "n = {n}");
        }
    }

    #[test]
    fn antichain_counts() {
        // inequivalent antichains on n points, minus the one containing the empty set
        let expected = [1, 2, 4, 9, 29, 209];
        for (n, &c) in (0..=5).zip(&expected) {
            assert_eq!(count(FamilySpec::hypergraphs(n, usize::MAX)), c, "n = {n}");
        }
    }

    #[test]
    fn bipartite_counts() {
        // unlabelled bipartite graphs
        assert_eq!(bipartite_graphs(4).unwrap().len(), 7);
        assert_eq!(bipartite_graphs(5).unwrap().len(), 13);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let a = vec![VertexSet::from_indices([0, 1]), VertexSet::from_indices([2, 3])];
        let b = vec![VertexSet::from_indices([1, 3]), VertexSet::from_indices([0, 2])];
        assert_eq!(canonical_form(&a, 4).unwrap(), canonical_form(&b, 4).unwrap());
    }

    #[test]
    fn generated_lists_are_canonical_clutters() {
        for e in edge_lists(&FamilySpec::hypergraphs(4, 4)).unwrap() {
            assert_eq!(canonical_form(&e, 4).unwrap(), e);
            assert!(crate::sets::is_antichain(&e));
        }
    }

    #[test]
    fn guards() {
        assert!(edge_lists(&FamilySpec::graphs(8)).is_err());
        assert!(edge_lists(&FamilySpec::uniform(4, 0, 3)).is_err());
    }
}
