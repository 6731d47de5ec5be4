//! Falsification harnesses over small exhaustive families. A probe reports
//! what it found; an empty candidate list says nothing beyond the family.

use std::fmt;
use std::str::FromStr;

use super::coloring::rainbow_coloring_with;
use super::minors::is_packed_with;
use super::powers::symbolic_equals_ordinary_with;
use super::theorems::height_by_search;
use super::Limits;
use crate::error::{Error, Result};
use crate::family::{for_each_edge_list, FamilySpec};
use crate::hypergraph::{edge_ideal, Hypergraph};
use crate::monomial::{MonomialIdeal, VariableContext};
use crate::polyhedra::np_equals_sp_capped;
use crate::sets::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeKind {
    /// Equidimensional `I` with `NP(I) = SP(I)` that is not packed or has
    /// `I^(m) != I^m` for some `m`.
    Q58,
    /// Packed `H` with no `(α·ht : ht)` rainbow coloring.
    C57,
}

impl ProbeKind {
    pub fn name(self) -> &'static str {
        match self {
            ProbeKind::Q58 => "q58",
            ProbeKind::C57 => "c57",
        }
    }
}

impl fmt::Display for ProbeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProbeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q58" => Ok(ProbeKind::Q58),
            "c57" => Ok(ProbeKind::C57),
            _ => Err(Error::InvalidArgument(format!(
                "unknown probe `{s}` (expected q58 or c57)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeCandidate {
    pub n: usize,
    pub generators: Vec<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeSkip {
    pub n: usize,
    pub generators: Vec<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub kind: ProbeKind,
    pub max_n: usize,
    /// Isomorphism classes examined (no isolated vertices, at least one edge).
    pub instances: usize,
    /// Instances meeting the probe's hypotheses.
    pub filtered: usize,
    pub candidates: Vec<ProbeCandidate>,
    pub skipped: Vec<ProbeSkip>,
}

impl ProbeReport {
    pub fn verdict(&self) -> &'static str {
        if self.candidates.is_empty() {
            "no counterexample in family"
        } else {
            "candidate found"
        }
    }
}

enum Outcome {
    Filtered(Option<String>),
    Ignored,
}

/// Run the probe over every clutter on `1..=max_n` vertices without isolated
/// vertices, one per isomorphism class.
pub fn conjecture_probe(kind: ProbeKind, max_n: usize, limits: &Limits) -> Result<ProbeReport> {
    if max_n > limits.max_family_vars {
        return Err(Error::guard("probe family vertex count", limits.max_family_vars, max_n));
    }
    let mut report = ProbeReport {
        kind,
        max_n,
        instances: 0,
        filtered: 0,
        candidates: Vec::new(),
        skipped: Vec::new(),
    };
    for n in 1..=max_n {
        let ctx = VariableContext::letters(n)?;
        let mut lists = Vec::new();
        for_each_edge_list(&FamilySpec::hypergraphs(n, usize::MAX), |e| {
            let covered = e.iter().fold(VertexSet::default(), |c, f| c.union(*f));
            if !e.is_empty() && covered == VertexSet::full(n) {
                lists.push(e.to_vec());
            }
        })?;
        for edges in lists {
            report.instances += 1;
            let h = Hypergraph::new(ctx.clone(), edges)?;
            let ideal = edge_ideal(&h);
            let outcome = match kind {
                ProbeKind::Q58 => probe_q58(&ideal, limits),
                ProbeKind::C57 => probe_c57(&h, &ideal, limits),
            };
            let generators = ideal.display_generators();
            match outcome {
                Ok(Outcome::Ignored) => {}
                Ok(Outcome::Filtered(None)) => report.filtered += 1,
                Ok(Outcome::Filtered(Some(reason))) => {
                    report.filtered += 1;
                    report.candidates.push(ProbeCandidate { n, generators, reason });
                }
                Err(e @ Error::GuardExceeded { .. }) => report.skipped.push(ProbeSkip {
                    n,
                    generators,
                    reason: e.to_string(),
                }),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(report)
}

fn probe_q58(ideal: &MonomialIdeal, limits: &Limits) -> Result<Outcome> {
    if !ideal.prime_decompose()?.is_equidimensional() || !np_equals_sp_capped(ideal, limits.max_vertex_vars)? {
        return Ok(Outcome::Ignored);
    }
    let verdict = is_packed_with(ideal, limits.max_packing_vars)?;
    if !verdict.packed {
        let (z, o) = verdict.failing_minor.unwrap_or_default();
        return Ok(Outcome::Filtered(Some(format!(
            "NP = SP but not packed (failing minor: zero {z:?}, one {o:?})"
        ))));
    }
    for p in symbolic_equals_ordinary_with(ideal, limits.m_max, limits.max_power_generators)? {
        if !p.equal {
            return Ok(Outcome::Filtered(Some(format!("NP = SP but I^({0}) != I^{0}", p.m))));
        }
    }
    Ok(Outcome::Filtered(None))
}

fn probe_c57(h: &Hypergraph, ideal: &MonomialIdeal, limits: &Limits) -> Result<Outcome> {
    if !is_packed_with(ideal, limits.max_packing_vars)?.packed {
        return Ok(Outcome::Ignored);
    }
    // α and ht of this ideal, recomputed per instance
    let alpha = ideal.initial_degree()? as u32;
    let ht = height_by_search(ideal) as u32;
    let a = alpha * ht;
    match rainbow_coloring_with(h, a, ht, limits)? {
        Some(_) => Ok(Outcome::Filtered(None)),
        None => Ok(Outcome::Filtered(Some(format!(
            "packed, but no ({a}:{ht}) rainbow coloring exists"
        )))),
    }
}
