//! Dense two-phase tableau simplex over exact rationals.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, lowest-index
//! leaving basic variable among ratio ties), so the method cannot cycle and
//! every run is reproducible. All variables are implicitly non-negative.

use num_traits::{Signed, Zero};

use super::rational::{dot, one, zero, Rational};
use crate::error::{Error, Result};

/// Hard ceiling on pivots in a single solve. Bland's rule terminates, so
/// hitting this indicates a bug.
pub const PIVOT_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpStatus {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

/// `optimize objective·x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<Rational>) -> Self {
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.nvars(), "constraint width");
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Fix a single variable to a bound, `x_j (rel) value`.
    pub fn add_bound(&mut self, j: usize, relation: Relation, value: Rational) {
        let mut coeffs = vec![zero(); self.nvars()];
        coeffs[j] = one();
        self.add_constraint(coeffs, relation, value);
    }

    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.nvars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn solve(&self) -> Result<LpStatus> {
        let mut t = match Tableau::phase_one(self)? {
            Some(t) => t,
            None => return Ok(LpStatus::Infeasible),
        };
        let mut cost = vec![zero(); t.ncols];
        for (j, c) in self.objective.iter().enumerate() {
            cost[j] = match self.sense {
                Sense::Minimize => c.clone(),
                Sense::Maximize => -c,
            };
        }
        let allowed: Vec<bool> = (0..t.ncols).map(|j| j < t.first_artificial).collect();
        if !t.minimize(&cost, &allowed)? {
            return Ok(LpStatus::Unbounded);
        }
        let point = t.point(self.nvars());
        let value = dot(&self.objective, &point);
        Ok(LpStatus::Optimal { value, point })
    }

    /// Some feasible point, if any (phase one only).
    pub fn feasible_point(&self) -> Result<Option<Vec<Rational>>> {
        Ok(Tableau::phase_one(self)?.map(|t| t.point(self.nvars())))
    }

    /// Optimal value together with the lexicographically smallest optimal point.
    pub fn solve_lexicographic(&self) -> Result<LpStatus> {
        let value = match self.solve()? {
            LpStatus::Optimal { value, .. } => value,
            other => return Ok(other),
        };
        let mut pinned = self.clone();
        pinned.add_constraint(self.objective.clone(), Relation::Eq, value.clone());
        let mut point = Vec::with_capacity(self.nvars());
        for j in 0..self.nvars() {
            let mut obj = vec![zero(); self.nvars()];
            obj[j] = one();
            let probe = LinearProgram {
                sense: Sense::Minimize,
                objective: obj,
                constraints: pinned.constraints.clone(),
            };
            let xj = match probe.solve()? {
                LpStatus::Optimal { value, .. } => value,
                _ => return Err(Error::Internal("lexicographic refinement lost feasibility".into())),
            };
            pinned.add_bound(j, Relation::Eq, xj.clone());
            point.push(xj);
        }
        Ok(LpStatus::Optimal { value, point })
    }
}

struct Tableau {
    /// Each row holds `ncols` coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
    first_artificial: usize,
    pivots: usize,
}

impl Tableau {
    /// Build the standard-form tableau and drive it to a feasible basis.
    /// `None` when the program is infeasible.
    fn phase_one(lp: &LinearProgram) -> Result<Option<Tableau>> {
        let n = lp.nvars();
        // normalise to non-negative right-hand sides
        let mut normalized: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        // `a·x >= 0` is `-a·x <= 0`, which a slack can start basic in
        for (coeffs, rel, rhs) in normalized.iter_mut() {
            if *rel == Relation::Ge && rhs.is_zero() {
                coeffs.iter_mut().for_each(|x| *x = -x.clone());
                *rel = Relation::Le;
            }
        }
        let slack_count = normalized.iter().filter(|(_, r, _)| *r != Relation::Eq).count();
        let art_count = normalized.iter().filter(|(_, r, _)| *r != Relation::Le).count();
        let first_artificial = n + slack_count;
        let ncols = first_artificial + art_count;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_art) = (n, first_artificial);
        for (coeffs, rel, rhs) in normalized {
            let mut row = coeffs;
            row.resize(ncols + 1, zero());
            row[ncols] = rhs;
            match rel {
                Relation::Le => {
                    row[next_slack] = one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -one();
                    next_slack += 1;
                    row[next_art] = one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        let mut t = Tableau {
            rows,
            basis,
            ncols,
            first_artificial,
            pivots: 0,
        };
        if art_count == 0 {
            return Ok(Some(t));
        }
        let cost: Vec<Rational> = (0..ncols)
            .map(|j| if j >= first_artificial { one() } else { zero() })
            .collect();
        let allowed = vec![true; ncols];
        if !t.minimize(&cost, &allowed)? {
            return Err(Error::Internal("phase one reported unbounded".into()));
        }
        let infeasibility: Rational = t
            .basis
            .iter()
            .zip(&t.rows)
            .filter(|(&b, _)| b >= first_artificial)
            .map(|(_, r)| r[ncols].clone())
            .sum();
        if infeasibility.is_positive() {
            return Ok(None);
        }
        t.evict_artificials();
        Ok(Some(t))
    }

    /// Pivot zero-level artificials out of the basis; drop rows that are
    /// linear combinations of the others.
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        self.pivots += 1;
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimise `cost·x` from the current feasible basis. Returns `false`
    /// when the objective is unbounded below.
    fn minimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Result<bool> {
        let mut in_basis = vec![false; self.ncols];
        loop {
            in_basis.iter_mut().for_each(|b| *b = false);
            for &b in &self.basis {
                in_basis[b] = true;
            }
            let entering = (0..self.ncols).find(|&j| {
                if !allowed[j] || in_basis[j] {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_negative()
            });
            let Some(j) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[j];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Ok(false);
            };
            self.pivot(r, j);
            if self.pivots > PIVOT_CAP {
                return Err(Error::Internal(format!("simplex exceeded {PIVOT_CAP} pivots")));
            }
        }
    }

    fn point(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![zero(); n];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < n {
                x[b] = row[self.ncols].clone();
            }
        }
        x
    }
}
