//! Covering and packing programs over 0/1 matrices, their LP relaxations with
//! dual certificates, and a depth-first branch-and-bound for the integer
//! versions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::rational::{int, is_nonnegative, one, zero, Rational};
use super::simplex::{LinearProgram, LpStatus, Relation, Sense};
use crate::error::{Error, Result};
use crate::hypergraph::{incidence_matrix, Hypergraph, ZeroOneMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgramKind {
    /// minimize `c·x` subject to `Mx >= 1`, `x >= 0`
    Cover,
    /// maximize `c·y` subject to `My <= 1`, `y >= 0`
    Pack,
}

#[derive(Debug, Clone)]
pub struct Program {
    pub kind: ProgramKind,
    pub matrix: ZeroOneMatrix,
    pub objective: Vec<Rational>,
    pub integral: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub value: Rational,
    pub point: Vec<Rational>,
    /// Optimal point of the dual program (LP solves only).
    pub dual_point: Option<Vec<Rational>>,
}

impl Program {
    pub fn new(kind: ProgramKind, matrix: ZeroOneMatrix, objective: Vec<Rational>) -> Result<Self> {
        if objective.len() != matrix.cols() {
            return Err(Error::InvalidArgument(format!(
                "objective has {} entries for {} columns",
                objective.len(),
                matrix.cols()
            )));
        }
        if !is_nonnegative(&objective) {
            return Err(Error::InvalidArgument(
                "objective coefficients must be non-negative".into(),
            ));
        }
        Ok(Program {
            kind,
            matrix,
            objective,
            integral: false,
        })
    }

    pub fn cover(matrix: ZeroOneMatrix, objective: Vec<Rational>) -> Result<Self> {
        Self::new(ProgramKind::Cover, matrix, objective)
    }

    pub fn pack(matrix: ZeroOneMatrix, objective: Vec<Rational>) -> Result<Self> {
        Self::new(ProgramKind::Pack, matrix, objective)
    }

    /// Transversal program of `h`: `Bᵀz >= 1`, unit weights.
    pub fn transversal(h: &Hypergraph) -> Self {
        let m = incidence_matrix(h).transpose();
        let c = vec![one(); m.cols()];
        Self::cover(m, c).expect("unit objective")
    }

    /// Edge-packing program of `h`: `By <= 1`, unit weights.
    pub fn packing(h: &Hypergraph) -> Self {
        let m = incidence_matrix(h);
        let c = vec![one(); m.cols()];
        Self::pack(m, c).expect("unit objective")
    }

    pub fn integral(mut self) -> Self {
        self.integral = true;
        self
    }

    pub fn nvars(&self) -> usize {
        self.matrix.cols()
    }

    fn row(&self, r: usize) -> Vec<Rational> {
        self.matrix.row(r).iter().map(|&x| int(x as i64)).collect()
    }

    fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.matrix.rows())
            .map(|r| int(self.matrix.get(r, c) as i64))
            .collect()
    }

    pub fn to_lp(&self) -> LinearProgram {
        let (sense, rel) = match self.kind {
            ProgramKind::Cover => (Sense::Minimize, Relation::Ge),
            ProgramKind::Pack => (Sense::Maximize, Relation::Le),
        };
        let mut lp = LinearProgram::new(sense, self.objective.clone());
        for r in 0..self.matrix.rows() {
            lp.add_constraint(self.row(r), rel, one());
        }
        lp
    }

    /// The LP dual: one variable per row of `M`.
    pub fn dual_lp(&self) -> LinearProgram {
        let rows = self.matrix.rows();
        let mut lp = match self.kind {
            // max 1·y, Mᵀy <= c
            ProgramKind::Cover => LinearProgram::new(Sense::Maximize, vec![one(); rows]),
            // min 1·x, Mᵀx >= c
            ProgramKind::Pack => LinearProgram::new(Sense::Minimize, vec![one(); rows]),
        };
        let rel = match self.kind {
            ProgramKind::Cover => Relation::Le,
            ProgramKind::Pack => Relation::Ge,
        };
        for c in 0..self.matrix.cols() {
            lp.add_constraint(self.column(c), rel, self.objective[c].clone());
        }
        lp
    }
}

fn expect_optimal(status: LpStatus, what: &str) -> Result<(Rational, Vec<Rational>)> {
    match status {
        LpStatus::Optimal { value, point } => Ok((value, point)),
        LpStatus::Infeasible => Err(Error::InvalidArgument(format!("{what} is infeasible"))),
        LpStatus::Unbounded => Err(Error::InvalidArgument(format!("{what} is unbounded"))),
    }
}

/// Exact LP optimum with the lexicographically smallest optimal point and a
/// dual optimal point. Primal and dual values are checked for equality.
pub fn solve_lp(p: &Program) -> Result<Solution> {
    if p.integral {
        return Err(Error::InvalidArgument("solve_lp called on an integer program".into()));
    }
    let primal = p.to_lp();
    let (value, point) = expect_optimal(primal.solve_lexicographic()?, "primal program")?;
    let dual = p.dual_lp();
    let (dual_value, dual_point) = expect_optimal(dual.solve()?, "dual program")?;
    if dual_value != value {
        return Err(Error::Internal(format!(
            "duality certificate mismatch: primal {value}, dual {dual_value}"
        )));
    }
    if !primal.is_feasible_point(&point) || !dual.is_feasible_point(&dual_point) {
        return Err(Error::Internal("simplex returned an infeasible point".into()));
    }
    Ok(Solution {
        value,
        point,
        dual_point: Some(dual_point),
    })
}

#[derive(Debug, Clone)]
pub struct IpOptions {
    /// Reject programs with more variables than this.
    pub max_vars: usize,
    /// Abort branch-and-bound after this many nodes.
    pub max_nodes: usize,
    /// Refine the reported point to the lexicographically smallest optimum.
    pub lexicographic: bool,
}

impl Default for IpOptions {
    fn default() -> Self {
        IpOptions {
            max_vars: 24,
            max_nodes: 1_000_000,
            lexicographic: true,
        }
    }
}

/// Exact integer optimum by branch-and-bound on the LP relaxation.
pub fn solve_ip(p: &Program, opts: &IpOptions) -> Result<Solution> {
    if p.nvars() > opts.max_vars {
        return Err(Error::guard("integer program variables", opts.max_vars, p.nvars()));
    }
    let lp = p.to_lp();
    let (value, mut point) = branch_and_bound(&lp, opts.max_nodes)?
        .ok_or_else(|| Error::InvalidArgument("integer program is infeasible".into()))?;
    if opts.lexicographic {
        point = lexicographic_integer_point(&lp, &value, opts.max_nodes)?;
    }
    Ok(Solution {
        value,
        point,
        dual_point: None,
    })
}

/// Solve an LP with `x` integral. `None` when infeasible.
pub fn branch_and_bound(lp: &LinearProgram, max_nodes: usize) -> Result<Option<(Rational, Vec<Rational>)>> {
    let better = |a: &Rational, b: &Rational| match lp.sense {
        Sense::Minimize => a < b,
        Sense::Maximize => a > b,
    };
    let mut incumbent: Option<(Rational, Vec<Rational>)> = None;
    let mut stack: Vec<Vec<(usize, Relation, BigInt)>> = vec![Vec::new()];
    let mut nodes = 0usize;
    while let Some(bounds) = stack.pop() {
        nodes += 1;
        if nodes > max_nodes {
            return Err(Error::guard("branch-and-bound nodes", max_nodes, nodes));
        }
        let mut node = lp.clone();
        for (j, rel, v) in &bounds {
            node.add_bound(*j, *rel, Rational::from_integer(v.clone()));
        }
        let (value, point) = match node.solve()? {
            LpStatus::Infeasible => continue,
            LpStatus::Unbounded => return Err(Error::InvalidArgument("integer program is unbounded".into())),
            LpStatus::Optimal { value, point } => (value, point),
        };
        if let Some((best, _)) = &incumbent {
            if !better(&value, best) {
                continue;
            }
        }
        match most_fractional(&point) {
            None => incumbent = Some((value, point)),
            Some(j) => {
                let floor = point[j].floor().to_integer();
                let ceil = &floor + BigInt::one();
                let mut up = bounds.clone();
                up.push((j, Relation::Ge, ceil));
                let mut down = bounds;
                down.push((j, Relation::Le, floor));
                stack.push(up);
                stack.push(down);
            }
        }
    }
    Ok(incumbent)
}

/// Index of the coordinate whose fractional part is closest to 1/2.
fn most_fractional(x: &[Rational]) -> Option<usize> {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut best: Option<(usize, Rational)> = None;
    for (j, v) in x.iter().enumerate() {
        if v.is_integer() {
            continue;
        }
        let frac = v - v.floor();
        let dist = (&frac - &half).abs();
        if best.as_ref().is_none_or(|(_, d)| dist < *d) {
            best = Some((j, dist));
        }
    }
    best.map(|(j, _)| j)
}

fn lexicographic_integer_point(lp: &LinearProgram, value: &Rational, max_nodes: usize) -> Result<Vec<Rational>> {
    let n = lp.nvars();
    let mut pinned = lp.clone();
    pinned.add_constraint(lp.objective.clone(), Relation::Eq, value.clone());
    let mut point = Vec::with_capacity(n);
    for j in 0..n {
        let mut obj = vec![zero(); n];
        obj[j] = one();
        let probe = LinearProgram {
            sense: Sense::Minimize,
            objective: obj,
            constraints: pinned.constraints.clone(),
        };
        let (xj, _) = branch_and_bound(&probe, max_nodes)?
            .ok_or_else(|| Error::Internal("lexicographic refinement lost feasibility".into()))?;
        pinned.add_bound(j, Relation::Eq, xj.clone());
        point.push(xj);
    }
    Ok(point)
}

/// True iff every coordinate is an integer.
pub fn is_integral_point(x: &[Rational]) -> bool {
    x.iter().all(|v| v.is_integer())
}

/// Round-half check used in reports: `value` as an integer when it is one.
pub fn as_integer(value: &Rational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// `gcd`-style helper: the least common multiple of all denominators.
pub fn common_denominator(x: &[Rational]) -> BigInt {
    x.iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
        .max(BigInt::one())
}
