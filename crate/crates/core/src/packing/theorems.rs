//! Consequences of the packing property, checked instance by instance. A
//! `holds() == false` on a checked instance is a theorem alarm.

use super::coloring::{exact_cover, rainbow_coloring_with, RainbowColoring};
use super::konig::transversal_number;
use super::minors::is_packed_with;
use super::powers::{symbolic_equals_ordinary_with, PowerComparison};
use super::Limits;
use crate::error::{Error, Result};
use crate::hypergraph::{alexander_dual, edge_ideal, Hypergraph};
use crate::lp::Rational;
use crate::monomial::MonomialIdeal;
use crate::polyhedra::{integrality_report, lp_equivalence_check, np_equals_sp_capped, waldschmidt, IntegralityReport};
use crate::sets::VertexSet;

/// Outcome of a check whose hypotheses may not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<T> {
    Skipped(String),
    Checked(T),
}

impl<T> Check<T> {
    pub fn checked(&self) -> Option<&T> {
        match self {
            Check::Checked(t) => Some(t),
            Check::Skipped(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformPackingReport {
    pub alpha: u64,
    pub exact_cover: Option<VertexSet>,
    /// An `(α : 1)` coloring.
    pub coloring: Option<RainbowColoring>,
    pub dual_packed: bool,
}

impl UniformPackingReport {
    pub fn holds(&self) -> bool {
        self.exact_cover.is_some() && self.coloring.is_some() && self.dual_packed
    }
}

/// For a uniform packed hypergraph: an exact cover exists, `H` is
/// `α(I)`-partite, and the dual ideal is packed.
pub fn uniform_packing_theorem_check(h: &Hypergraph, limits: &Limits) -> Result<Check<UniformPackingReport>> {
    if h.is_unit() {
        return Ok(Check::Skipped("unit ideal".into()));
    }
    if h.is_edgeless() {
        return Ok(Check::Skipped("no edges".into()));
    }
    if !h.is_uniform() {
        let mut sizes: Vec<usize> = h.edges().iter().map(|e| e.len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        return Ok(Check::Skipped(format!("not uniform (edge sizes {sizes:?})")));
    }
    let ideal = edge_ideal(h);
    if !is_packed_with(&ideal, limits.max_packing_vars)?.packed {
        return Ok(Check::Skipped("not packed".into()));
    }
    let alpha = h.edges()[0].len() as u64;
    let coloring = rainbow_coloring_with(h, alpha as u32, 1, limits)?;
    let dual = alexander_dual(&ideal)?;
    Ok(Check::Checked(UniformPackingReport {
        alpha,
        exact_cover: exact_cover(h),
        coloring,
        dual_packed: is_packed_with(&dual, limits.max_packing_vars)?.packed,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquidimReport {
    pub packed: bool,
    pub dual_packed: bool,
}

impl EquidimReport {
    pub fn holds(&self) -> bool {
        self.packed == self.dual_packed
    }
}

/// When `I` and `I^∨` are both equidimensional, they are packed together.
pub fn equidim_duality_check(ideal: &MonomialIdeal, limits: &Limits) -> Result<Check<EquidimReport>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(Check::Skipped("zero or unit ideal".into()));
    }
    if !ideal.prime_decompose()?.is_equidimensional() {
        return Ok(Check::Skipped("ideal is not equidimensional".into()));
    }
    let dual = alexander_dual(ideal)?;
    if !dual.prime_decompose()?.is_equidimensional() {
        return Ok(Check::Skipped("dual ideal is not equidimensional".into()));
    }
    Ok(Check::Checked(EquidimReport {
        packed: is_packed_with(ideal, limits.max_packing_vars)?.packed,
        dual_packed: is_packed_with(&dual, limits.max_packing_vars)?.packed,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceReport {
    pub np_equals_sp: bool,
    pub integrality: IntegralityReport,
    pub alpha: u64,
    pub waldschmidt: Rational,
    pub objectives_checked: usize,
    /// First objective where the two LP optima differ.
    pub lp_mismatch: Option<Vec<Rational>>,
}

impl ConsequenceReport {
    pub fn alpha_equals_waldschmidt(&self) -> bool {
        Rational::from_integer(self.alpha.into()) == self.waldschmidt
    }

    /// Everything a packed ideal must satisfy.
    pub fn holds(&self) -> bool {
        let i = &self.integrality;
        self.np_equals_sp
            && i.symbolic
            && i.hypergraph
            && i.blocker
            && i.dual_symbolic
            && self.alpha_equals_waldschmidt()
            && self.lp_mismatch.is_none()
    }
}

/// Evaluate the consequences of packing: `NP = SP`, integrality of the four
/// associated polyhedra, `α = α̂`, and equal optima of `min c·a` over `NP` and
/// `SP` for each given objective.
pub fn packed_consequences(
    ideal: &MonomialIdeal,
    objectives: &[Vec<Rational>],
    limits: &Limits,
) -> Result<ConsequenceReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let np_equals_sp = np_equals_sp_capped(ideal, limits.max_vertex_vars)?;
    let integrality = integrality_report(ideal, limits.max_vertex_vars)?;
    let alpha = ideal.initial_degree()?;
    let waldschmidt = waldschmidt(ideal)?;
    let mut lp_mismatch = None;
    for c in objectives {
        if !lp_equivalence_check(ideal, c)?.equal {
            lp_mismatch = Some(c.clone());
            break;
        }
    }
    Ok(ConsequenceReport {
        np_equals_sp,
        integrality,
        alpha,
        waldschmidt,
        objectives_checked: objectives.len(),
        lp_mismatch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardDirection {
    pub powers: Vec<PowerComparison>,
    pub packed: bool,
    pub bipartite_graph: bool,
}

impl ForwardDirection {
    pub fn all_equal(&self) -> bool {
        self.powers.iter().all(|p| p.equal)
    }

    /// Packed ideals have `I^(m) = I^m`; bipartite graphs are packed.
    pub fn consistent(&self) -> bool {
        let all_equal = self.all_equal();
        !(self.packed && !all_equal) && !(self.bipartite_graph && all_equal && !self.packed)
    }
}

pub fn forward_direction_check(ideal: &MonomialIdeal, limits: &Limits) -> Result<ForwardDirection> {
    let h = crate::hypergraph::hypergraph_of(ideal)?;
    Ok(ForwardDirection {
        powers: symbolic_equals_ordinary_with(ideal, limits.m_max, limits.max_power_generators)?,
        packed: is_packed_with(ideal, limits.max_packing_vars)?.packed,
        bipartite_graph: h.is_bipartite_graph(),
    })
}

/// `ht(I)` for a square-free ideal, by branch and bound on covers.
pub(crate) fn height_by_search(ideal: &MonomialIdeal) -> usize {
    transversal_number(&ideal.supports())
}
