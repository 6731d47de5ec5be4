//! Monomials and monomial ideals over a fixed, named set of variables.
//!
//! Ideals are stored in canonical form: the minimal generators, sorted in the
//! lexicographic monomial order (`x_1 > x_2 > ..`). Equality of ideals is then
//! plain equality of generator lists.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sets::{self, VertexSet, MAX_VERTICES};

/// The ordered variable names of the polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable is required".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::InvalidContext("empty variable name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    /// Variables `a, b, c, ..` for `n <= 26`, otherwise `x1, .., xn`.
    pub fn letters(n: usize) -> Result<Arc<Self>> {
        if n <= 26 {
            Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Self::new((1..=n).map(|i| format!("x{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parse a juxtaposed product such as `abc`, valid when every variable
    /// name is a single character.
    pub fn parse_word(&self, word: &str) -> Result<VertexSet> {
        word.chars()
            .map(|c| {
                self.index_of(&c.to_string())
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{c}` in `{word}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(VertexSet::from_indices)
    }

    /// Render a vertex set as a juxtaposed word (or `1` when empty).
    pub fn word(&self, set: VertexSet) -> String {
        if set.is_empty() {
            return "1".into();
        }
        let single = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = set.iter().map(|v| self.name(v)).collect();
        if single {
            parts.concat()
        } else {
            parts.join("*")
        }
    }
}

pub(crate) fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!("{:?} vs {:?}", a.names(), b.names())))
    }
}

/// An exponent vector `x^a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn from_support(n: usize, set: VertexSet) -> Self {
        let mut m = Self::one(n);
        for v in set.iter() {
            m.exps[v] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Set of variables with a positive exponent. Requires at most 64 variables.
    pub fn support(&self) -> VertexSet {
        debug_assert!(self.exps.len() <= MAX_VERTICES);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("monomial product")))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Render with the variable names of `ctx`, e.g. `a^2*b` or `ab`.
    pub fn display(&self, ctx: &VariableContext) -> String {
        if self.is_one() {
            return "1".into();
        }
        if self.is_square_free() {
            return ctx.word(self.support());
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ctx.name(i).to_string()
                } else {
                    format!("{}^{e}", ctx.name(i))
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    /// Lexicographic monomial order, larger monomials first.
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps)
    }
}

/// Divisibility-minimal elements of `gens`, deduplicated and sorted.
pub fn minimize(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    if let Some(first) = gens.first() {
        let n = first.nvars();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::ContextMismatch(format!(
                "monomials over {} and {} variables",
                n,
                bad.nvars()
            )));
        }
    }
    Ok(minimize_owned(gens.to_vec()))
}

fn minimize_owned(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

/// A monomial ideal in canonical (minimally generated) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_generators().join(", "))
    }
}

impl MonomialIdeal {
    pub fn new(ctx: Arc<VariableContext>, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != ctx.len()) {
            return Err(Error::ContextMismatch(format!(
                "monomial over {} variables in a ring with {}",
                bad.nvars(),
                ctx.len()
            )));
        }
        Ok(MonomialIdeal {
            ctx,
            gens: minimize_owned(gens),
        })
    }

    /// Square-free ideal generated by the products over each given support.
    pub fn from_supports(ctx: Arc<VariableContext>, supports: &[VertexSet]) -> Result<Self> {
        let n = ctx.len();
        if n > MAX_VERTICES {
            return Err(Error::guard("variables in a square-free ideal", MAX_VERTICES, n));
        }
        let full = VertexSet::full(n);
        if let Some(bad) = supports.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::InvalidArgument(format!(
                "support {bad:?} uses a variable outside the ring"
            )));
        }
        let gens = sets::minimal_family(supports.to_vec())
            .into_iter()
            .map(|s| Monomial::from_support(n, s))
            .collect();
        Ok(MonomialIdeal { ctx, gens })
    }

    /// Parse juxtaposed words like `["abc", "aef"]`.
    pub fn from_words(ctx: Arc<VariableContext>, words: &[&str]) -> Result<Self> {
        let supports = words.iter().map(|w| ctx.parse_word(w)).collect::<Result<Vec<_>>>()?;
        Self::from_supports(ctx, &supports)
    }

    pub fn zero(ctx: Arc<VariableContext>) -> Self {
        MonomialIdeal { ctx, gens: vec![] }
    }

    pub fn unit(ctx: Arc<VariableContext>) -> Self {
        let n = ctx.len();
        MonomialIdeal {
            ctx,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    pub fn supports(&self) -> Vec<VertexSet> {
        let mut s: Vec<VertexSet> = self.gens.iter().map(Monomial::support).collect();
        s.sort_unstable();
        s
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display(&self.ctx)).collect()
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.nvars() != self.nvars() {
            return Err(Error::ContextMismatch(format!(
                "monomial over {} variables, ideal over {}",
                m.nvars(),
                self.nvars()
            )));
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        same_context(&self.ctx, &other.ctx)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        same_context(&self.ctx, &other.ctx)?;
        Ok(self.gens == other.gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_context(&self.ctx, &other.ctx)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimize_owned(lcms),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_context(&self.ctx, &other.ctx)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimize_owned(prods),
        })
    }

    /// Ordinary power `I^m`, `m >= 1`.
    pub fn power(&self, m: u32) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Least total degree of a generator.
    pub fn initial_degree(&self) -> Result<u64> {
        self.gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)
    }

    fn require_square_free(&self) -> Result<()> {
        if !self.is_square_free() {
            return Err(Error::Unsupported("operation requires a square-free ideal".into()));
        }
        if self.nvars() > MAX_VERTICES {
            return Err(Error::guard(
                "variables in a square-free ideal",
                MAX_VERTICES,
                self.nvars(),
            ));
        }
        Ok(())
    }

    /// Irredundant decomposition into monomial primes: the minimal
    /// transversals of the generator supports.
    pub fn prime_decompose(&self) -> Result<PrimeDecomposition> {
        self.require_square_free()?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(PrimeDecomposition {
            ctx: self.ctx.clone(),
            primes: sets::minimal_transversals(&self.supports()),
        })
    }

    /// Height, i.e. the smallest prime in the decomposition (0 for the unit ideal).
    pub fn height(&self) -> Result<usize> {
        Ok(self.prime_decompose()?.height())
    }

    /// `I^(m) = P_1^m ∩ .. ∩ P_s^m` for a square-free ideal.
    pub fn symbolic_power(&self, m: u32) -> Result<MonomialIdeal> {
        self.symbolic_power_capped(m, usize::MAX)
    }

    /// [`Self::symbolic_power`], failing once an intermediate intersection
    /// has more than `max_generators` generators.
    pub fn symbolic_power_capped(&self, m: u32, max_generators: usize) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        let dec = self.prime_decompose()?;
        if m == 1 {
            return Ok(self.clone());
        }
        let mut acc = MonomialIdeal::unit(self.ctx.clone());
        for &p in dec.primes() {
            acc = acc.intersect(&prime_power(&self.ctx, p, m))?;
            if acc.gens.len() > max_generators {
                return Err(Error::guard(
                    "symbolic power generators",
                    max_generators,
                    acc.gens.len(),
                ));
            }
        }
        Ok(acc)
    }

    /// Set the variables in `zero` to 0 and those in `one` to 1.
    ///
    /// The variables stay in the ring; the result may be the zero or the unit ideal.
    pub fn substitute(&self, zero: VertexSet, one: VertexSet) -> Result<MonomialIdeal> {
        if zero.meets(one) {
            return Err(Error::InvalidArgument(
                "variables set to 0 and to 1 must be disjoint".into(),
            ));
        }
        let gens = self
            .gens
            .iter()
            .filter(|g| !g.exps.iter().enumerate().any(|(i, &e)| e > 0 && zero.contains(i)))
            .map(|g| {
                let mut g = g.clone();
                for v in one.iter() {
                    if v < g.exps.len() {
                        g.exps[v] = 0;
                    }
                }
                g
            })
            .collect();
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimize_owned(gens),
        })
    }
}

/// `P^m` for the monomial prime on `support`: every degree-`m` monomial in
/// those variables.
pub fn prime_power(ctx: &Arc<VariableContext>, support: VertexSet, m: u32) -> MonomialIdeal {
    let vars: Vec<usize> = support.iter().collect();
    let n = ctx.len();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; n];
    fn fill(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {}
            [last] => {
                exps[*last] = left;
                out.push(Monomial::new(exps.clone()));
                exps[*last] = 0;
            }
            [v, rest @ ..] => {
                for e in (0..=left).rev() {
                    exps[*v] = e;
                    fill(rest, left - e, exps, out);
                }
                exps[*v] = 0;
            }
        }
    }
    fill(&vars, m, &mut exps, &mut gens);
    MonomialIdeal {
        ctx: ctx.clone(),
        gens: minimize_owned(gens),
    }
}

/// The associated primes of a square-free ideal, each stored as its set of
/// variables, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDecomposition {
    ctx: Arc<VariableContext>,
    primes: Vec<VertexSet>,
}

impl PrimeDecomposition {
    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn primes(&self) -> &[VertexSet] {
        &self.primes
    }

    pub fn heights(&self) -> Vec<usize> {
        self.primes.iter().map(|p| p.len()).collect()
    }

    pub fn height(&self) -> usize {
        self.primes.iter().map(|p| p.len()).min().unwrap_or(0)
    }

    pub fn is_equidimensional(&self) -> bool {
        self.primes.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// The primes as ideals, e.g. `(a, d)`.
    pub fn prime_ideals(&self) -> Vec<MonomialIdeal> {
        let n = self.ctx.len();
        self.primes
            .iter()
            .map(|p| MonomialIdeal {
                ctx: self.ctx.clone(),
                gens: minimize_owned(p.iter().map(|v| Monomial::variable(n, v)).collect()),
            })
            .collect()
    }

    /// Intersection of all primes; reproduces the decomposed ideal.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        self.prime_ideals()
            .iter()
            .try_fold(MonomialIdeal::unit(self.ctx.clone()), |acc, p| acc.intersect(p))
    }

    pub fn display(&self) -> Vec<String> {
        self.primes
            .iter()
            .map(|&p| {
                let names: Vec<&str> = p.iter().map(|v| self.ctx.name(v)).collect();
                format!("({})", names.join(","))
            })
            .collect()
    }
}
