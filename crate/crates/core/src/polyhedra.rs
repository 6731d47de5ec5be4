//! Newton polyhedron `NP(I)` (kept as generators plus the orthant) and the
//! symbolic polyhedron `SP(I) = {y >= 0, Ay >= 1}` of a monomial ideal.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{blocker, hypergraph_of, ZeroOneMatrix};
use crate::lp::vertices::DEFAULT_VERTEX_CAP;
use crate::lp::{
    is_integral, solve_lp, vertex_enumerate_capped, LinearProgram, LpStatus, Program, Rational, Relation, Sense,
};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::sets::{minimal_transversals, VertexSet, MAX_VERTICES};

fn check_point(n: usize, a: &[Rational]) -> Result<()> {
    if a.len() != n {
        return Err(Error::InvalidArgument(format!(
            "point has {} coordinates, ring has {n} variables",
            a.len()
        )));
    }
    if a.iter().any(|x| x.is_negative()) {
        return Err(Error::InvalidArgument("point has a negative coordinate".into()));
    }
    Ok(())
}

fn to_rational(e: u32) -> Rational {
    Rational::from_integer(BigInt::from(e))
}

#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    nvars: usize,
    generators: Vec<Vec<u32>>,
    // valid inequalities `Σ_{i∈S} a_i >= bound`, used to reject points without an LP
    cuts: Vec<(VertexSet, u64)>,
}

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let n = ideal.nvars();
        let generators: Vec<Vec<u32>> = ideal.generators().iter().map(|g| g.exponents().to_vec()).collect();
        let mut cuts = Vec::new();
        if !generators.is_empty() && n <= MAX_VERTICES {
            let mut normals = minimal_transversals(&ideal.supports());
            normals.push(VertexSet::full(n));
            for s in normals {
                let bound = generators
                    .iter()
                    .map(|g| s.iter().map(|i| g[i] as u64).sum::<u64>())
                    .min()
                    .unwrap_or(0);
                if bound > 0 {
                    cuts.push((s, bound));
                }
            }
        }
        NewtonPolyhedron {
            nvars: n,
            generators,
            cuts,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators_exponents(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// `a ∈ conv(generators) + R^n_{>=0}`. Empty for the zero ideal.
    pub fn contains(&self, a: &[Rational]) -> Result<bool> {
        check_point(self.nvars, a)?;
        if self.generators.is_empty() {
            return Ok(false);
        }
        if self
            .generators
            .iter()
            .any(|g| g.iter().zip(a).all(|(&e, x)| to_rational(e) <= *x))
        {
            return Ok(true);
        }
        for (s, bound) in &self.cuts {
            let lhs: Rational = s.iter().map(|i| a[i].clone()).sum();
            if lhs < Rational::from_integer(BigInt::from(*bound)) {
                return Ok(false);
            }
        }
        self.contains_by_lp(a)
    }

    /// Membership decided by the LP alone: `∃λ >= 0, Σλ = 1, Σλ_j g_j <= a`.
    pub fn contains_by_lp(&self, a: &[Rational]) -> Result<bool> {
        check_point(self.nvars, a)?;
        let k = self.generators.len();
        if k == 0 {
            return Ok(false);
        }
        let mut lp = LinearProgram::new(Sense::Minimize, vec![Rational::zero(); k]);
        lp.add_constraint(
            vec![Rational::from_integer(1.into()); k],
            Relation::Eq,
            Rational::from_integer(1.into()),
        );
        for (i, ai) in a.iter().enumerate() {
            let row = self.generators.iter().map(|g| to_rational(g[i])).collect();
            lp.add_constraint(row, Relation::Le, ai.clone());
        }
        Ok(lp.feasible_point()?.is_some())
    }

    /// The generators that are vertices of the polyhedron, i.e. not in the
    /// polyhedron of the remaining generators.
    pub fn vertices(&self) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        for (j, g) in self.generators.iter().enumerate() {
            let others = NewtonPolyhedron {
                nvars: self.nvars,
                generators: self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, h)| h.clone())
                    .collect(),
                cuts: Vec::new(),
            };
            let point: Vec<Rational> = g.iter().map(|&e| to_rational(e)).collect();
            if !others.contains(&point)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct SymbolicPolyhedron {
    nvars: usize,
    halfspaces: Vec<VertexSet>,
}

impl SymbolicPolyhedron {
    /// Requires a nonzero square-free ideal.
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let dec = ideal.prime_decompose()?;
        Ok(SymbolicPolyhedron {
            nvars: ideal.nvars(),
            halfspaces: dec.primes().to_vec(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// One covering inequality `Σ_{i∈P} y_i >= 1` per associated prime `P`.
    pub fn halfspaces(&self) -> &[VertexSet] {
        &self.halfspaces
    }

    pub fn matrix(&self) -> ZeroOneMatrix {
        ZeroOneMatrix::from_set_rows(&self.halfspaces, self.nvars)
    }

    pub fn contains(&self, a: &[Rational]) -> Result<bool> {
        check_point(self.nvars, a)?;
        let one = Rational::from_integer(1.into());
        Ok(self
            .halfspaces
            .iter()
            .all(|p| p.iter().map(|i| a[i].clone()).sum::<Rational>() >= one))
    }

    pub fn vertices(&self, cap: usize) -> Result<Vec<Vec<Rational>>> {
        vertex_enumerate_capped(&self.matrix(), cap)
    }
}

pub fn np_contains(ideal: &MonomialIdeal, a: &[Rational]) -> Result<bool> {
    NewtonPolyhedron::new(ideal).contains(a)
}

pub fn sp_contains(ideal: &MonomialIdeal, a: &[Rational]) -> Result<bool> {
    SymbolicPolyhedron::new(ideal)?.contains(a)
}

pub fn np_vertices(ideal: &MonomialIdeal) -> Result<Vec<Vec<u32>>> {
    NewtonPolyhedron::new(ideal).vertices()
}

pub fn sp_vertices(ideal: &MonomialIdeal) -> Result<Vec<Vec<Rational>>> {
    sp_vertices_capped(ideal, DEFAULT_VERTEX_CAP)
}

pub fn sp_vertices_capped(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<Vec<Rational>>> {
    SymbolicPolyhedron::new(ideal)?.vertices(cap)
}

pub fn sp_is_integral(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(is_integral(&sp_vertices(ideal)?))
}

/// Integrality of the four polyhedra that are integral together: `SP(I)`,
/// the covering polyhedra `Q(H)` and `Q(H^∨)`, and `SP(I^∨)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegralityReport {
    pub symbolic: bool,
    pub hypergraph: bool,
    pub blocker: bool,
    pub dual_symbolic: bool,
}

impl IntegralityReport {
    pub fn all_agree(&self) -> bool {
        let v = self.symbolic;
        self.hypergraph == v && self.blocker == v && self.dual_symbolic == v
    }
}

/// Each polyhedron is built along its own route: `SP(I)` from the prime
/// decomposition, `Q(H)` from the edges, `Q(H^∨)` from the blocker, `SP(I^∨)`
/// from the decomposition of the dual ideal.
pub fn integrality_report(ideal: &MonomialIdeal, cap: usize) -> Result<IntegralityReport> {
    let h = hypergraph_of(ideal)?;
    let n = ideal.nvars();
    let symbolic = is_integral(&sp_vertices_capped(ideal, cap)?);
    let hypergraph = is_integral(&vertex_enumerate_capped(
        &ZeroOneMatrix::from_set_rows(h.edges(), n),
        cap,
    )?);
    let b = blocker(&h);
    let blocker_integral = is_integral(&vertex_enumerate_capped(
        &ZeroOneMatrix::from_set_rows(b.edges(), n),
        cap,
    )?);
    let dual = crate::hypergraph::alexander_dual(ideal)?;
    let dual_symbolic = if dual.is_zero() {
        // SP of the zero ideal is undefined; I is the unit ideal and Q(H) is empty
        hypergraph
    } else {
        is_integral(&sp_vertices_capped(&dual, cap)?)
    };
    Ok(IntegralityReport {
        symbolic,
        hypergraph,
        blocker: blocker_integral,
        dual_symbolic,
    })
}

/// `NP(I) = SP(I)`, decided by testing every vertex of `SP(I)` for membership in `NP(I)`.
pub fn np_equals_sp(ideal: &MonomialIdeal) -> Result<bool> {
    np_equals_sp_capped(ideal, DEFAULT_VERTEX_CAP)
}

pub fn np_equals_sp_capped(ideal: &MonomialIdeal, cap: usize) -> Result<bool> {
    let np = NewtonPolyhedron::new(ideal);
    for v in sp_vertices_capped(ideal, cap)? {
        if !np.contains(&v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One more than the largest exponent of any variable in a generator. Past it,
/// lowering a coordinate to that exponent never changes membership in either
/// polyhedron.
pub fn default_box_bound(ideal: &MonomialIdeal) -> u32 {
    ideal
        .generators()
        .iter()
        .flat_map(|g| g.exponents().iter().copied())
        .max()
        .unwrap_or(0)
        + 1
}

/// Every integer point of `[0, box_bound]^n` lies in `NP(I)` iff it lies in `SP(I)`.
pub fn lattice_points_agree(ideal: &MonomialIdeal, box_bound: u32) -> Result<bool> {
    Ok(lattice_disagreement(ideal, box_bound)?.is_none())
}

/// The first lattice point (in odometer order) where the two memberships differ.
pub fn lattice_disagreement(ideal: &MonomialIdeal, box_bound: u32) -> Result<Option<Vec<u32>>> {
    let np = NewtonPolyhedron::new(ideal);
    let sp = SymbolicPolyhedron::new(ideal)?;
    let n = ideal.nvars();
    let mut x = vec![0u32; n];
    loop {
        let a: Vec<Rational> = x.iter().map(|&e| to_rational(e)).collect();
        if np.contains(&a)? != sp.contains(&a)? {
            return Ok(Some(x));
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(None);
            }
            if x[i] < box_bound {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// `α(I)`, the least generator degree.
pub fn alpha(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.initial_degree()
}

/// `α̂(I) = min{Σ y_i : y ∈ SP(I)}` together with the lexicographically
/// smallest minimiser.
pub fn waldschmidt_solution(ideal: &MonomialIdeal) -> Result<(Rational, Vec<Rational>)> {
    let sp = SymbolicPolyhedron::new(ideal)?;
    let ones = vec![Rational::from_integer(1.into()); ideal.nvars()];
    let sol = solve_lp(&Program::cover(sp.matrix(), ones)?)?;
    Ok((sol.value, sol.point))
}

pub fn waldschmidt(ideal: &MonomialIdeal) -> Result<Rational> {
    Ok(waldschmidt_solution(ideal)?.0)
}

/// Default cap on generators of an intermediate symbolic power.
pub const DEFAULT_POWER_GENERATORS: usize = 200_000;

/// `(m, α(I^(m))/m)` for `m = 1..=m_max`, with symbolic powers computed directly.
pub fn waldschmidt_limit_check(ideal: &MonomialIdeal, m_max: u32) -> Result<Vec<(u32, Rational)>> {
    waldschmidt_limit_check_capped(ideal, m_max, DEFAULT_POWER_GENERATORS)
}

pub fn waldschmidt_limit_check_capped(
    ideal: &MonomialIdeal,
    m_max: u32,
    max_generators: usize,
) -> Result<Vec<(u32, Rational)>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut out = Vec::new();
    for m in 1..=m_max {
        let p = ideal.symbolic_power_capped(m, max_generators)?;
        let d = p.initial_degree()?;
        out.push((m, Rational::new(BigInt::from(d), BigInt::from(m))));
    }
    Ok(out)
}

/// Least `b <= b_max` such that `b·vertex` is integral and `x^{b·vertex} ∈ I^(b)`.
/// `None` only means nothing was found within the cap.
pub fn scaling_membership_check(ideal: &MonomialIdeal, vertex: &[Rational], b_max: u32) -> Result<Option<u32>> {
    if !sp_contains(ideal, vertex)? {
        return Err(Error::InvalidArgument("point is not in the symbolic polyhedron".into()));
    }
    for b in 1..=b_max {
        let scaled: Vec<Rational> = vertex.iter().map(|x| x * Rational::from_integer(b.into())).collect();
        if !scaled.iter().all(|x| x.is_integer()) {
            continue;
        }
        let mut exps = Vec::with_capacity(scaled.len());
        for x in &scaled {
            let e = u32::try_from(x.to_integer()).map_err(|_| Error::Overflow("scaled exponent"))?;
            exps.push(e);
        }
        if ideal.symbolic_power(b)?.contains(&Monomial::new(exps))? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpComparison {
    pub sp_value: Rational,
    pub np_value: Rational,
    pub equal: bool,
}

/// `min c·a` over `SP(I)` (halfspace form) and over `NP(I)` (an LP in the
/// generator weights `λ` and slack `s`, with `a = Σλ_j g_j + s`).
pub fn lp_equivalence_check(ideal: &MonomialIdeal, c: &[Rational]) -> Result<LpComparison> {
    let n = ideal.nvars();
    if c.len() != n {
        return Err(Error::InvalidArgument(format!(
            "objective has {} entries, ring has {n} variables",
            c.len()
        )));
    }
    if c.iter().any(|x| x.is_negative()) {
        return Err(Error::InvalidArgument(
            "objective must be non-negative; otherwise both programs are unbounded".into(),
        ));
    }
    let sp = SymbolicPolyhedron::new(ideal)?;
    let sp_value = solve_lp(&Program::cover(sp.matrix(), c.to_vec())?)?.value;

    let gens = ideal.generators();
    let k = gens.len();
    let mut objective: Vec<Rational> = gens
        .iter()
        .map(|g| g.exponents().iter().zip(c).map(|(&e, ci)| to_rational(e) * ci).sum())
        .collect();
    objective.extend(c.iter().cloned());
    let mut lp = LinearProgram::new(Sense::Minimize, objective);
    let mut row = vec![Rational::from_integer(1.into()); k];
    row.extend(std::iter::repeat_n(Rational::zero(), n));
    lp.add_constraint(row, Relation::Eq, Rational::from_integer(1.into()));
    let np_value = match lp.solve()? {
        LpStatus::Optimal { value, .. } => value,
        other => return Err(Error::Internal(format!("Newton polyhedron LP: {other:?}"))),
    };
    Ok(LpComparison {
        equal: sp_value == np_value,
        sp_value,
        np_value,
    })
}
