//! Hypergraphs (clutters) and their dictionary with square-free ideals:
//! edge ideals, blockers, incidence and prime decomposition matrices, minors.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, VariableContext};
use crate::sets::{self, VertexSet, MAX_VERTICES};

/// A clutter on the variables of a context. Edges are kept inclusion-minimal
/// and sorted.
///
/// Two degenerate states arise from minors: no edges at all (the zero ideal)
/// and the single empty edge (the unit ideal, reached when a contraction
/// swallows an edge).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    ctx: Arc<VariableContext>,
    edges: Vec<VertexSet>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.edges.iter().map(|&e| self.ctx.word(e)).collect();
        write!(f, "H{{{}}}", words.join(","))
    }
}

impl Hypergraph {
    /// Edges are minimized; empty edges and out-of-range vertices are rejected.
    pub fn new(ctx: Arc<VariableContext>, edges: Vec<VertexSet>) -> Result<Self> {
        let n = ctx.len();
        if n > MAX_VERTICES {
            return Err(Error::guard("hypergraph vertices", MAX_VERTICES, n));
        }
        if edges.iter().any(|e| e.is_empty()) {
            return Err(Error::InvalidArgument("hypergraph edges must be nonempty".into()));
        }
        let full = VertexSet::full(n);
        if let Some(bad) = edges.iter().find(|e| !e.is_subset(full)) {
            return Err(Error::InvalidArgument(format!("edge {bad:?} leaves the vertex set")));
        }
        Ok(Hypergraph {
            ctx,
            edges: sets::minimal_family(edges),
        })
    }

    pub fn from_words(ctx: Arc<VariableContext>, words: &[&str]) -> Result<Self> {
        let edges = words.iter().map(|w| ctx.parse_word(w)).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, edges)
    }

    /// The hypergraph of the unit ideal (a single empty edge).
    pub fn unit(ctx: Arc<VariableContext>) -> Self {
        Hypergraph {
            ctx,
            edges: vec![VertexSet::EMPTY],
        }
    }

    pub(crate) fn from_minimal(ctx: Arc<VariableContext>, edges: Vec<VertexSet>) -> Self {
        Hypergraph {
            ctx,
            edges: sets::minimal_family(edges),
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn nvertices(&self) -> usize {
        self.ctx.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn is_unit(&self) -> bool {
        self.edges.len() == 1 && self.edges[0].is_empty()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices lying in at least one edge.
    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |s, &e| s.union(e))
    }

    /// All edges have the same size.
    pub fn is_uniform(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Every edge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// Two-colourable graph test (only meaningful when `is_graph`).
    pub fn is_bipartite_graph(&self) -> bool {
        if !self.is_graph() {
            return false;
        }
        let n = self.nvertices();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let s = side[v].unwrap();
                for e in self.edges.iter().filter(|e| e.contains(v)) {
                    let w = e.without(v).first().unwrap();
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            stack.push(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Delete `delete` and contract `contract`: keep edges missing `delete`,
    /// strip `contract` from them, minimize. The vertex set is unchanged.
    pub fn minor(&self, delete: VertexSet, contract: VertexSet) -> Result<Hypergraph> {
        if delete.meets(contract) {
            return Err(Error::InvalidArgument(
                "deleted and contracted vertex sets must be disjoint".into(),
            ));
        }
        Ok(Hypergraph {
            ctx: self.ctx.clone(),
            edges: minor_edges(&self.edges, delete, contract),
        })
    }

    /// Drop vertices that lie in no edge, renaming into a smaller context.
    /// Returns the new hypergraph and, for each new vertex, its old index.
    pub fn compactify(&self) -> Result<(Hypergraph, Vec<usize>)> {
        let keep: Vec<usize> = self.covered_vertices().iter().collect();
        if keep.is_empty() {
            return Err(Error::InvalidArgument("no vertex lies in an edge".into()));
        }
        let names: Vec<String> = keep.iter().map(|&v| self.ctx.name(v).to_string()).collect();
        let ctx = VariableContext::new(names)?;
        let mut relabel = vec![0usize; self.nvertices()];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self.edges.iter().map(|e| e.permute(&relabel)).collect();
        Ok((Hypergraph::from_minimal(ctx, edges), keep))
    }
}

pub(crate) fn minor_edges(edges: &[VertexSet], delete: VertexSet, contract: VertexSet) -> Vec<VertexSet> {
    let kept: Vec<VertexSet> = edges
        .iter()
        .filter(|e| e.is_disjoint(delete))
        .map(|e| e.difference(contract))
        .collect();
    if kept.iter().any(|e| e.is_empty()) {
        return vec![VertexSet::EMPTY];
    }
    sets::minimal_family(kept)
}

/// `I(H)`, generated by the products over the edges.
pub fn edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    MonomialIdeal::from_supports(h.ctx.clone(), &h.edges).expect("hypergraph edges lie in the vertex set")
}

/// Inverse of [`edge_ideal`] on square-free ideals.
pub fn hypergraph_of(ideal: &MonomialIdeal) -> Result<Hypergraph> {
    if !ideal.is_square_free() {
        return Err(Error::Unsupported("hypergraph_of needs a square-free ideal".into()));
    }
    if ideal.nvars() > MAX_VERTICES {
        return Err(Error::guard("hypergraph vertices", MAX_VERTICES, ideal.nvars()));
    }
    Ok(Hypergraph::from_minimal(ideal.context().clone(), ideal.supports()))
}

/// Alexander dual `I^∨`: the ideal generated by the products over each
/// associated prime.
///
/// Also defined on the two degenerate square-free ideals: the zero ideal and
/// the unit ideal are exchanged.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let h = hypergraph_of(ideal)?;
    let covers = sets::minimal_transversals(h.edges());
    MonomialIdeal::from_supports(ideal.context().clone(), &covers)
}

/// The blocker `H^∨`: edges are the minimal vertex covers of `H`.
pub fn blocker(h: &Hypergraph) -> Hypergraph {
    Hypergraph::from_minimal(h.ctx.clone(), sets::minimal_transversals(&h.edges))
}

/// Minimal vertex covers and maximal independent sets (their complements).
pub fn covers_and_sets(h: &Hypergraph) -> Result<(Vec<VertexSet>, Vec<VertexSet>)> {
    if h.is_edgeless() {
        return Err(Error::InvalidArgument("hypergraph has no edges".into()));
    }
    if h.is_unit() {
        return Err(Error::InvalidArgument("hypergraph has an empty edge".into()));
    }
    let covers = sets::minimal_transversals(&h.edges);
    let full = VertexSet::full(h.nvertices());
    let independents = covers.iter().map(|c| full.difference(*c)).collect();
    Ok((covers, independents))
}

pub fn is_equidimensional(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(ideal.prime_decompose()?.is_equidimensional())
}

/// Dense 0/1 matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZeroOneMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u8>>, cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, &x) in r.iter().enumerate() {
                if x > 1 {
                    return Err(Error::InvalidArgument(format!("entry ({i},{j}) is not 0/1")));
                }
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// One row per set, columns `0..cols` as characteristic vectors.
    pub fn from_set_rows(sets: &[VertexSet], cols: usize) -> Self {
        let mut m = Self::zeros(sets.len(), cols);
        for (i, s) in sets.iter().enumerate() {
            for v in s.iter() {
                m.set(i, v, 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u8) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Support of a row as a vertex set (requires `cols <= 64`).
    pub fn row_set(&self, r: usize) -> VertexSet {
        self.row(r)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == 1)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn transpose(&self) -> ZeroOneMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }
}

/// `B`: `n × t`, `B[i][j] = 1` iff vertex `i` lies in edge `j`; edges in sorted order.
pub fn incidence_matrix(h: &Hypergraph) -> ZeroOneMatrix {
    ZeroOneMatrix::from_set_rows(&h.edges, h.nvertices()).transpose()
}

/// `A`: `s × n`, `A[i][j] = 1` iff `x_j` lies in the prime `P_i`; primes in sorted order.
pub fn prime_matrix(ideal: &MonomialIdeal) -> Result<ZeroOneMatrix> {
    let dec = ideal.prime_decompose()?;
    Ok(ZeroOneMatrix::from_set_rows(dec.primes(), ideal.nvars()))
}
