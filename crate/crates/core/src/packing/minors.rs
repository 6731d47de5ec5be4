//! Scans over all `3^n` ways of setting variables to 0, to 1, or leaving them.

use std::collections::HashMap;

use super::konig::konig_edges;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::monomial::MonomialIdeal;
use crate::sets::{minimal_family, VertexSet};

pub const DEFAULT_PACKING_VARS: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingVerdict {
    pub konig: bool,
    pub packed: bool,
    /// `(V', V'')`: variables set to 0 and to 1 in a minor that is not König.
    pub failing_minor: Option<(VertexSet, VertexSet)>,
    /// Substitution patterns covered, pruned subtrees included.
    pub minors_checked: u64,
    /// Distinct minor clutters actually tested.
    pub distinct_minors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorScan {
    /// Every failing pattern, in scan order.
    pub failing: Vec<(VertexSet, VertexSet)>,
    pub minors_checked: u64,
    pub distinct_minors: usize,
}

struct Scanner {
    n: usize,
    stop_at_first: bool,
    memo: HashMap<Vec<VertexSet>, bool>,
    checked: u64,
    failing: Vec<(VertexSet, VertexSet)>,
}

impl Scanner {
    fn new(n: usize, stop_at_first: bool) -> Self {
        Scanner {
            n,
            stop_at_first,
            memo: HashMap::new(),
            checked: 0,
            failing: Vec::new(),
        }
    }

    fn done(&self) -> bool {
        self.stop_at_first && !self.failing.is_empty()
    }

    // `edges` is the current family with vertices below `v` already decided;
    // vertex `v` is kept, deleted (set to 0) or contracted (set to 1), in that order
    fn visit(&mut self, v: usize, edges: &[VertexSet], zero: VertexSet, one: VertexSet) {
        if self.done() {
            return;
        }
        if edges.is_empty() || edges.iter().any(|e| e.is_empty()) {
            // edgeless or unit: every further minor is the same and König
            self.checked += 3u64.pow((self.n - v) as u32);
            return;
        }
        if v == self.n {
            self.checked += 1;
            let key = minimal_family(edges.to_vec());
            let konig = match self.memo.get(&key) {
                Some(&k) => k,
                None => {
                    let k = konig_edges(&key);
                    self.memo.insert(key, k);
                    k
                }
            };
            if !konig {
                self.failing.push((zero, one));
            }
            return;
        }
        self.visit(v + 1, edges, zero, one);
        if !edges.iter().any(|e| e.contains(v)) {
            // v is isolated: both substitutions leave the family unchanged
            for (z, o) in [(zero.with(v), one), (zero, one.with(v))] {
                self.visit(v + 1, edges, z, o);
            }
            return;
        }
        let deleted: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.contains(v)).collect();
        self.visit(v + 1, &deleted, zero.with(v), one);
        let contracted: Vec<VertexSet> = edges.iter().map(|e| e.without(v)).collect();
        self.visit(v + 1, &contracted, zero, one.with(v));
    }
}

fn edges_of(ideal: &MonomialIdeal, max_vars: usize) -> Result<Vec<VertexSet>> {
    if !ideal.is_square_free() {
        return Err(Error::Unsupported("packing scan needs a square-free ideal".into()));
    }
    if ideal.nvars() > max_vars {
        return Err(Error::guard("packing scan variables", max_vars, ideal.nvars()));
    }
    Ok(ideal.supports())
}

fn scan(edges: &[VertexSet], n: usize, stop_at_first: bool) -> Scanner {
    let mut s = Scanner::new(n, stop_at_first);
    s.visit(0, edges, VertexSet::default(), VertexSet::default());
    s
}

/// Packing verdict with the default cap of 14 variables.
pub fn is_packed(ideal: &MonomialIdeal) -> Result<PackingVerdict> {
    is_packed_with(ideal, DEFAULT_PACKING_VARS)
}

/// Every substitution minor is König. Stops at the first failing pattern;
/// the pattern `(∅, ∅)` (the ideal itself) is tried first.
pub fn is_packed_with(ideal: &MonomialIdeal, max_vars: usize) -> Result<PackingVerdict> {
    let edges = edges_of(ideal, max_vars)?;
    let s = scan(&edges, ideal.nvars(), true);
    let failing_minor = s.failing.first().copied();
    let konig = match failing_minor {
        Some((z, o)) if z.is_empty() && o.is_empty() => false,
        _ => konig_edges(&edges),
    };
    Ok(PackingVerdict {
        konig,
        packed: failing_minor.is_none(),
        failing_minor,
        minors_checked: s.checked,
        distinct_minors: s.memo.len(),
    })
}

pub fn hypergraph_is_packed(h: &Hypergraph, max_vars: usize) -> Result<PackingVerdict> {
    is_packed_with(&crate::hypergraph::edge_ideal(h), max_vars)
}

/// The full scan: all `3^n` patterns, listing every one whose minor is not König.
pub fn failing_minors(ideal: &MonomialIdeal, max_vars: usize) -> Result<MinorScan> {
    let edges = edges_of(ideal, max_vars)?;
    let s = scan(&edges, ideal.nvars(), false);
    Ok(MinorScan {
        failing: s.failing,
        minors_checked: s.checked,
        distinct_minors: s.memo.len(),
    })
}
