use num_bigint::BigInt;

use super::Limits;
use crate::error::{Error, Result};
use crate::hypergraph::{hypergraph_of, Hypergraph};
use crate::lp::Rational;
use crate::monomial::MonomialIdeal;
use crate::polyhedra::waldschmidt;
use crate::sets::VertexSet;

/// Vertex cover meeting every edge in exactly one vertex. The edgeless
/// hypergraph has `∅`; the unit state has none.
pub fn exact_cover(h: &Hypergraph) -> Option<VertexSet> {
    if h.is_unit() {
        return None;
    }
    fn go(edges: &[VertexSet], chosen: VertexSet, banned: VertexSet) -> Option<VertexSet> {
        let Some(&e) = edges.iter().find(|e| !e.meets(chosen)) else {
            return Some(chosen);
        };
        let mut banned = banned;
        for v in e.difference(banned).iter() {
            // nothing sharing an edge with v may join the cover
            let neighbours = edges
                .iter()
                .filter(|f| f.contains(v))
                .fold(VertexSet::default(), |acc, f| acc.union(*f));
            if let Some(c) = go(edges, chosen.with(v), banned.union(neighbours)) {
                return Some(c);
            }
            banned = banned.with(v);
        }
        None
    }
    go(h.edges(), VertexSet::default(), VertexSet::default())
}

const MAX_COLORS: u32 = 64;

/// `f : V -> ([a] choose b)`; bit `i` of `assignment[v]` is color `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowColoring {
    pub a: u32,
    pub b: u32,
    pub assignment: Vec<u64>,
}

fn full_mask(a: u32) -> u64 {
    if a >= 64 {
        u64::MAX
    } else {
        (1u64 << a) - 1
    }
}

impl RainbowColoring {
    /// Colors of `v`, numbered from 1.
    pub fn colors(&self, v: usize) -> Vec<u32> {
        (0..self.a)
            .filter(|&i| self.assignment[v] >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    /// `A_i = {v : i ∈ f(v)}` for `i = 1..=a`.
    pub fn color_classes(&self) -> Vec<VertexSet> {
        (0..self.a)
            .map(|i| {
                self.assignment
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| *m >> i & 1 == 1)
                    .map(|(v, _)| v)
                    .collect()
            })
            .collect()
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(format!("invalid rainbow coloring: {msg}")));
        if self.b == 0 || self.a < self.b || self.a > MAX_COLORS {
            return bad(format!(
                "need 1 <= b <= a <= {MAX_COLORS}, got a = {}, b = {}",
                self.a, self.b
            ));
        }
        if self.assignment.len() != h.nvertices() {
            return bad(format!(
                "{} vertices colored, hypergraph has {}",
                self.assignment.len(),
                h.nvertices()
            ));
        }
        let full = full_mask(self.a);
        for (v, m) in self.assignment.iter().enumerate() {
            if m & !full != 0 || m.count_ones() != self.b {
                return bad(format!(
                    "vertex {v} does not get exactly {} of the {} colors",
                    self.b, self.a
                ));
            }
        }
        for e in h.edges() {
            let seen = e.iter().fold(0u64, |acc, v| acc | self.assignment[v]);
            if seen != full {
                return bad(format!("edge {e:?} misses a color"));
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        self.validate(h).is_ok()
    }
}

/// Search for an `(a : b)` rainbow coloring under the default guards.
pub fn rainbow_coloring(h: &Hypergraph, a: u32, b: u32) -> Result<Option<RainbowColoring>> {
    rainbow_coloring_with(h, a, b, &Limits::default())
}

/// Backtracking over vertices in order. Colors are interchangeable, so a
/// vertex may only introduce the lowest unused colors; an edge is abandoned
/// once its unassigned vertices cannot supply the colors it still misses.
pub fn rainbow_coloring_with(h: &Hypergraph, a: u32, b: u32, limits: &Limits) -> Result<Option<RainbowColoring>> {
    if b == 0 || a < b {
        return Err(Error::InvalidArgument(format!(
            "need a >= b >= 1, got a = {a}, b = {b}"
        )));
    }
    if a > MAX_COLORS {
        return Err(Error::guard("rainbow coloring colors", MAX_COLORS as usize, a as usize));
    }
    let n = h.nvertices();
    let work = (n as u128) * binomial_u128(a as u128, b as u128);
    if work > limits.max_coloring_work as u128 {
        return Err(Error::guard(
            "rainbow coloring work n·C(a,b)",
            limits.max_coloring_work as usize,
            usize::try_from(work).unwrap_or(usize::MAX),
        ));
    }
    if h.is_unit() || h.edges().iter().any(|e| (e.len() as u64) * (b as u64) < a as u64) {
        return Ok(None);
    }
    let edges = h.edges();
    let mut search = ColorSearch {
        n,
        a,
        b,
        edges,
        incident: (0..n)
            .map(|v| (0..edges.len()).filter(|&j| edges[j].contains(v)).collect())
            .collect(),
        assignment: vec![0; n],
        nodes: 0,
        max_nodes: limits.max_coloring_nodes,
    };
    if search.go(0, 0)? {
        Ok(Some(RainbowColoring {
            a,
            b,
            assignment: search.assignment,
        }))
    } else {
        Ok(None)
    }
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

struct ColorSearch<'a> {
    n: usize,
    a: u32,
    b: u32,
    edges: &'a [VertexSet],
    incident: Vec<Vec<usize>>,
    assignment: Vec<u64>,
    nodes: u64,
    max_nodes: u64,
}

impl ColorSearch<'_> {
    fn feasible(&self, v: usize) -> bool {
        self.incident[v].iter().all(|&j| {
            let e = self.edges[j];
            let mut seen = 0u64;
            let mut open = 0u32;
            for u in e.iter() {
                if u <= v {
                    seen |= self.assignment[u];
                } else {
                    open += 1;
                }
            }
            self.a - seen.count_ones() <= self.b * open
        })
    }

    fn go(&mut self, v: usize, used: u32) -> Result<bool> {
        if v == self.n {
            return Ok(true);
        }
        if self.incident[v].is_empty() {
            self.assignment[v] = full_mask(self.b);
            return self.go(v + 1, used);
        }
        for old in 0..=self.b.min(used) {
            let fresh = self.b - old;
            if used + fresh > self.a {
                continue;
            }
            let fresh_mask = if fresh == 0 { 0 } else { full_mask(fresh) << used };
            let mut subset = if old == 0 { 0 } else { full_mask(old) };
            loop {
                self.nodes += 1;
                if self.nodes > self.max_nodes {
                    return Err(Error::guard(
                        "rainbow coloring search nodes",
                        self.max_nodes as usize,
                        self.nodes as usize,
                    ));
                }
                self.assignment[v] = subset | fresh_mask;
                if self.feasible(v) && self.go(v + 1, used + fresh)? {
                    return Ok(true);
                }
                match next_subset(subset, used) {
                    Some(s) => subset = s,
                    None => break,
                }
            }
        }
        self.assignment[v] = 0;
        Ok(false)
    }
}

// next mask with the same popcount inside the low `width` bits
fn next_subset(s: u64, width: u32) -> Option<u64> {
    if s == 0 {
        return None;
    }
    let c = s & s.wrapping_neg();
    let r = s + c;
    let next = (((r ^ s) >> 2) / c) | r;
    (r != 0 && next <= full_mask(width)).then_some(next)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    /// Each color class shrunk to a minimal vertex cover.
    pub covers: Vec<VertexSet>,
    /// Largest number of those covers sharing one vertex.
    pub max_multiplicity: u32,
    pub bound: Rational,
    pub waldschmidt: Rational,
    /// Multiplicity at most `b` and `α̂(I) >= a/b`.
    pub holds: bool,
}

/// From an `(a : b)` coloring of `H(I)`, extract `a` minimal covers with no
/// vertex in more than `b` of them, and compare `α̂(I)` with `a/b`.
pub fn partite_lower_bound_check(ideal: &MonomialIdeal, coloring: &RainbowColoring) -> Result<LowerBoundReport> {
    let h = hypergraph_of(ideal)?;
    coloring.validate(&h)?;
    let edges = h.edges();
    let is_cover = |c: VertexSet| edges.iter().all(|e| e.meets(c));
    let covers: Vec<VertexSet> = coloring
        .color_classes()
        .into_iter()
        .map(|class| {
            class
                .iter()
                .fold(class, |c, v| if is_cover(c.without(v)) { c.without(v) } else { c })
        })
        .collect();
    let max_multiplicity = (0..h.nvertices())
        .map(|v| covers.iter().filter(|c| c.contains(v)).count() as u32)
        .max()
        .unwrap_or(0);
    let bound = Rational::new(BigInt::from(coloring.a), BigInt::from(coloring.b));
    let waldschmidt = waldschmidt(ideal)?;
    Ok(LowerBoundReport {
        holds: max_multiplicity <= coloring.b && waldschmidt >= bound,
        covers,
        max_multiplicity,
        bound,
        waldschmidt,
    })
}
