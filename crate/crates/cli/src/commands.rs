//! One function per subcommand. Each returns the JSON report and the list of
//! theorem alarms raised while building it.

use serde_json::{json, Map, Value};
use sfpack::lp::{parse_rational, solve_lp, Program, Rational};
use sfpack::packing::{
    conjecture_probe, failing_minors, is_konig, is_packed_with, packing_number, partite_lower_bound_check,
    rainbow_coloring_with, symbolic_equals_ordinary_with, transversal_number, ProbeKind,
};
use sfpack::polyhedra::{
    alpha, integrality_report, np_contains, np_equals_sp_capped, np_vertices, scaling_membership_check, sp_contains,
    sp_vertices_capped, waldschmidt, waldschmidt_limit_check_capped, waldschmidt_solution, NewtonPolyhedron,
    SymbolicPolyhedron,
};
use sfpack::{alexander_dual, blocker, hypergraph_of, Hypergraph, Limits, Monomial, MonomialIdeal, VertexSet};

use crate::input::InputDocument;
use crate::render;

/// A failed command: exit code, short kind and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CommandError {
    pub fn input(message: impl Into<String>) -> Self {
        CommandError {
            code: 2,
            kind: "input",
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"code": self.code, "kind": self.kind, "message": self.message}})
    }
}

impl From<sfpack::Error> for CommandError {
    fn from(e: sfpack::Error) -> Self {
        use sfpack::Error::*;
        let (code, kind) = match &e {
            GuardExceeded { .. } => (3, "guard"),
            Overflow(_) => (3, "overflow"),
            Internal(_) => (4, "internal"),
            Unsupported(_) => (2, "unsupported"),
            ZeroIdeal => (2, "zero_ideal"),
            ContextMismatch(_) | InvalidContext(_) | InvalidArgument(_) => (2, "argument"),
        };
        CommandError {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

impl From<crate::input::InputError> for CommandError {
    fn from(e: crate::input::InputError) -> Self {
        CommandError::input(e.0)
    }
}

pub type CommandResult = Result<Report, CommandError>;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub value: Value,
    pub alarms: Vec<String>,
}

impl Report {
    fn plain(value: Value) -> Self {
        Report {
            value,
            alarms: Vec::new(),
        }
    }

    fn with_alarms(mut value: Map<String, Value>, alarms: Vec<String>) -> Self {
        value.insert("alarms".into(), json!(alarms));
        Report {
            value: Value::Object(value),
            alarms,
        }
    }
}

fn hypergraph_invariants(h: &Hypergraph) -> Result<Map<String, Value>, CommandError> {
    let mut m = Map::new();
    m.insert("tau".into(), json!(transversal_number(h.edges())));
    m.insert("pi".into(), json!(packing_number(h.edges())));
    m.insert(
        "tau_f".into(),
        render::rational(&solve_lp(&Program::transversal(h))?.value),
    );
    m.insert("pi_f".into(), render::rational(&solve_lp(&Program::packing(h))?.value));
    Ok(m)
}

fn failing_json(zero: VertexSet, one: VertexSet, i: &MonomialIdeal) -> Value {
    json!({"delete": render::names(zero, i.context()), "contract": render::names(one, i.context())})
}

fn power_table(i: &MonomialIdeal, m_max: u32, limits: &Limits) -> Result<(Value, bool), CommandError> {
    let powers = symbolic_equals_ordinary_with(i, m_max, limits.max_power_generators)?;
    let all_equal = powers.iter().all(|p| p.equal);
    let rows = powers
        .iter()
        .map(|p| {
            let mut row = Map::new();
            row.insert("m".into(), json!(p.m));
            row.insert("equal".into(), json!(p.equal));
            if let Some(w) = &p.witness {
                row.insert("witness".into(), render::monomial(w, i.context()));
            }
            Value::Object(row)
        })
        .collect();
    Ok((rows, all_equal))
}

pub fn analyze(doc: &InputDocument, max_m: Option<u32>, limits: &Limits) -> CommandResult {
    let i = doc.ideal()?;
    let ctx = i.context();
    let h = hypergraph_of(&i)?;
    let dec = i.prime_decompose()?;
    let konig = is_konig(&i)?;
    let verdict = is_packed_with(&i, limits.max_packing_vars)?;
    let integrality = integrality_report(&i, limits.max_vertex_vars)?;
    let np_sp = np_equals_sp_capped(&i, limits.max_vertex_vars)?;
    let a = alpha(&i)?;
    let w = waldschmidt(&i)?;
    let dual = alexander_dual(&i)?;
    let dual_packed = is_packed_with(&dual, limits.max_packing_vars)?.packed;
    let dual_equidim = dual.prime_decompose()?.is_equidimensional();
    let (powers, powers_equal) = power_table(&i, max_m.unwrap_or(limits.m_max), limits)?;

    let mut r = Map::new();
    r.insert("ideal".into(), echo(doc));
    r.insert("minimal_generators".into(), Value::Object(render::ideal(&i)));
    r.insert(
        "prime_decomposition".into(),
        dec.primes().iter().map(|&p| render::names(p, ctx)).collect(),
    );
    r.insert("height".into(), json!(dec.height()));
    r.insert("equidimensional".into(), json!(dec.is_equidimensional()));
    r.insert("alpha".into(), json!(a));
    r.insert("waldschmidt".into(), render::rational(&w));
    r.insert("hypergraph".into(), Value::Object(hypergraph_invariants(&h)?));
    r.insert("blocker".into(), Value::Object(hypergraph_invariants(&blocker(&h))?));
    r.insert("konig".into(), json!(konig.konig));
    if let Some(wit) = &konig.witness {
        r.insert("konig_witness".into(), render::words(wit, ctx));
    }
    r.insert("packed".into(), json!(verdict.packed));
    if let Some((z, o)) = verdict.failing_minor {
        r.insert("failing_minor".into(), failing_json(z, o, &i));
    }
    r.insert("minors_checked".into(), json!(verdict.minors_checked));
    r.insert("distinct_minors".into(), json!(verdict.distinct_minors));
    r.insert("sp_integral".into(), json!(integrality.symbolic));
    r.insert(
        "integrality".into(),
        json!({
            "symbolic": integrality.symbolic,
            "hypergraph": integrality.hypergraph,
            "blocker": integrality.blocker,
            "dual_symbolic": integrality.dual_symbolic,
        }),
    );
    r.insert("np_equals_sp".into(), json!(np_sp));
    let mut d = render::ideal(&dual);
    d.insert("packed".into(), json!(dual_packed));
    d.insert("equidimensional".into(), json!(dual_equidim));
    r.insert("dual".into(), Value::Object(d));
    r.insert("symbolic_vs_ordinary".into(), powers);

    let mut alarms = Vec::new();
    let alpha_eq = Rational::from_integer(a.into()) == w;
    if verdict.konig != konig.konig {
        alarms.push("minor scan and König test disagree on the ideal itself".to_string());
    }
    if verdict.packed {
        if !konig.konig {
            alarms.push("packed but not König".into());
        }
        if !np_sp {
            alarms.push("packed but NP(I) != SP(I)".into());
        }
        if !integrality.symbolic {
            alarms.push("packed but SP(I) has a fractional vertex".into());
        }
        if !alpha_eq {
            alarms.push("packed but alpha != waldschmidt".into());
        }
        if !powers_equal {
            alarms.push("packed but some symbolic power differs from the ordinary power".into());
        }
    }
    if !integrality.all_agree() {
        alarms.push("the four integrality verdicts disagree".into());
    }
    if h.is_bipartite_graph() && !verdict.packed {
        alarms.push("bipartite graph that is not packed".into());
    }
    if dec.is_equidimensional() && dual_equidim && verdict.packed != dual_packed {
        alarms.push("I and its dual are equidimensional but only one is packed".into());
    }
    Ok(Report::with_alarms(r, alarms))
}

/// The input document as parsed: variables and deduplicated generators.
pub fn echo(doc: &InputDocument) -> Value {
    json!({
        "variables": doc.variables,
        "generators": doc.generators.iter()
            .map(|g| g.iter().map(|(n, e)| json!([n, e])).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn dual(doc: &InputDocument, limits: &Limits) -> CommandResult {
    let i = doc.ideal()?;
    let d = alexander_dual(&i)?;
    let mut r = render::ideal(&d);
    r.insert("variables".into(), json!(doc.variables));
    r.insert(
        "packed".into(),
        json!(is_packed_with(&d, limits.max_packing_vars)?.packed),
    );
    let equidim = if d.is_zero() || d.is_unit() {
        Value::Null
    } else {
        json!(d.prime_decompose()?.is_equidimensional())
    };
    r.insert("equidimensional".into(), equidim);
    Ok(Report::plain(Value::Object(r)))
}

pub fn decompose(doc: &InputDocument) -> CommandResult {
    let i = doc.ideal()?;
    let dec = i.prime_decompose()?;
    Ok(Report::plain(json!({
        "primes": dec.primes().iter().map(|&p| render::names(p, i.context())).collect::<Vec<_>>(),
        "heights": dec.heights(),
        "height": dec.height(),
        "equidimensional": dec.is_equidimensional(),
    })))
}

fn variable_set(i: &MonomialIdeal, names: &[String], flag: &str) -> Result<VertexSet, CommandError> {
    names
        .iter()
        .map(|n| {
            i.context()
                .index_of(n)
                .ok_or_else(|| CommandError::input(format!("{flag}: undeclared variable `{n}`")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(VertexSet::from_indices)
}

pub fn minor(doc: &InputDocument, delete: &[String], contract: &[String]) -> CommandResult {
    let i = doc.ideal()?;
    let zero = variable_set(&i, delete, "--delete")?;
    let one = variable_set(&i, contract, "--contract")?;
    let m = i.substitute(zero, one)?;
    let k = is_konig(&m)?;
    let mut r = render::ideal(&m);
    r.insert("delete".into(), render::names(zero, i.context()));
    r.insert("contract".into(), render::names(one, i.context()));
    r.insert("zero".into(), json!(m.is_zero()));
    r.insert("unit".into(), json!(m.is_unit()));
    r.insert("konig".into(), json!(k.konig));
    r.insert("height".into(), json!(k.height));
    Ok(Report::plain(Value::Object(r)))
}

pub fn packing(doc: &InputDocument, all_failing: bool, limits: &Limits) -> CommandResult {
    let i = doc.ideal()?;
    let v = is_packed_with(&i, limits.max_packing_vars)?;
    let mut r = Map::new();
    r.insert("packed".into(), json!(v.packed));
    r.insert("konig".into(), json!(v.konig));
    if let Some((z, o)) = v.failing_minor {
        r.insert("failing_minor".into(), failing_json(z, o, &i));
    }
    // the full scan does not stop at the first failure, so its counts cover every pattern
    if all_failing {
        let scan = failing_minors(&i, limits.max_packing_vars)?;
        r.insert(
            "failing_minors".into(),
            scan.failing.iter().map(|&(z, o)| failing_json(z, o, &i)).collect(),
        );
        r.insert("minors_checked".into(), json!(scan.minors_checked));
        r.insert("distinct_minors".into(), json!(scan.distinct_minors));
    } else {
        r.insert("minors_checked".into(), json!(v.minors_checked));
        r.insert("distinct_minors".into(), json!(v.distinct_minors));
    }
    let mut alarms = Vec::new();
    if v.packed && !v.konig {
        alarms.push("packed but not König".to_string());
    }
    Ok(Report::with_alarms(r, alarms))
}

pub fn waldschmidt_cmd(doc: &InputDocument, limit_m: Option<u32>, limits: &Limits) -> CommandResult {
    let i = doc.ideal()?;
    let (w, point) = waldschmidt_solution(&i)?;
    let mut r = Map::new();
    r.insert("waldschmidt".into(), render::rational(&w));
    r.insert("minimizer".into(), render::point(&point));
    let mut alarms = Vec::new();
    if let Some(m_max) = limit_m {
        let ratios = waldschmidt_limit_check_capped(&i, m_max, limits.max_power_generators)?;
        for (m, q) in &ratios {
            if w > *q {
                alarms.push(format!("waldschmidt exceeds alpha(I^({m}))/{m}"));
            }
        }
        r.insert(
            "ratios".into(),
            ratios
                .iter()
                .map(|(m, q)| json!({"m": m, "alpha_over_m": render::rational(q)}))
                .collect(),
        );
    }
    Ok(Report::with_alarms(r, alarms))
}

pub fn alpha_cmd(doc: &InputDocument) -> CommandResult {
    let i = doc.ideal()?;
    Ok(Report::plain(json!({"alpha": alpha(&i)?})))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Np,
    Sp,
}

fn parse_point(text: &str) -> Result<Vec<Rational>, CommandError> {
    text.split(',')
        .map(|s| parse_rational(s).map_err(|e| CommandError::input(format!("--contains: {e}"))))
        .collect()
}

pub fn polyhedron(
    doc: &InputDocument,
    which: Which,
    vertices: bool,
    contains: Option<&str>,
    limits: &Limits,
) -> CommandResult {
    let i = doc.ideal()?;
    let ctx = i.context();
    let mut r = Map::new();
    match which {
        Which::Np => {
            let np = NewtonPolyhedron::new(&i);
            r.insert("which".into(), json!("np"));
            r.insert(
                "generators".into(),
                np.generators_exponents()
                    .iter()
                    .map(|g| render::monomial(&Monomial::new(g.clone()), ctx))
                    .collect(),
            );
            if vertices {
                r.insert(
                    "vertices".into(),
                    np_vertices(&i)?
                        .into_iter()
                        .map(|v| render::monomial(&Monomial::new(v), ctx))
                        .collect(),
                );
            }
            if let Some(p) = contains {
                r.insert("contains".into(), json!(np_contains(&i, &parse_point(p)?)?));
            }
        }
        Which::Sp => {
            let sp = SymbolicPolyhedron::new(&i)?;
            r.insert("which".into(), json!("sp"));
            r.insert(
                "halfspaces".into(),
                sp.halfspaces().iter().map(|&s| render::names(s, ctx)).collect(),
            );
            if vertices {
                let vs = sp_vertices_capped(&i, limits.max_vertex_vars)?;
                r.insert("integral".into(), json!(sfpack::lp::is_integral(&vs)));
                // least b with x^{b·v} in I^(b), null past the profile's b_max
                let scaling = vs
                    .iter()
                    .map(|v| scaling_membership_check(&i, v, limits.b_max).map(|b| json!(b)))
                    .collect::<Result<Vec<_>, _>>()?;
                r.insert("vertex_scaling".into(), Value::Array(scaling));
                r.insert("vertices".into(), vs.iter().map(|v| render::point(v)).collect());
            }
            if let Some(p) = contains {
                r.insert("contains".into(), json!(sp_contains(&i, &parse_point(p)?)?));
            }
        }
    }
    r.insert("variables".into(), json!(doc.variables));
    Ok(Report::plain(Value::Object(r)))
}

pub fn sympower(doc: &InputDocument, max_m: Option<u32>, limits: &Limits) -> CommandResult {
    let i = doc.ideal()?;
    let m_max = max_m.unwrap_or(limits.m_max);
    if m_max == 0 {
        return Err(CommandError::input("--max-m must be positive"));
    }
    let mut rows = Vec::new();
    let mut ordinary = i.clone();
    for m in 1..=m_max {
        if m > 1 {
            ordinary = ordinary.multiply(&i)?;
            if ordinary.generators().len() > limits.max_power_generators {
                return Err(sfpack::Error::GuardExceeded {
                    what: "ordinary power generators",
                    limit: limits.max_power_generators,
                    actual: ordinary.generators().len(),
                }
                .into());
            }
        }
        let mut row = Map::new();
        row.insert("m".into(), json!(m));
        let mut o = render::ideal(&ordinary);
        o.insert("alpha".into(), json!(ordinary.initial_degree()?));
        row.insert("ordinary".into(), Value::Object(o));
        if i.is_square_free() {
            let s = i.symbolic_power_capped(m, limits.max_power_generators)?;
            let mut sj = render::ideal(&s);
            sj.insert("alpha".into(), json!(s.initial_degree()?));
            row.insert("symbolic".into(), Value::Object(sj));
        }
        rows.push(row);
    }
    let mut r = Map::new();
    r.insert("square_free".into(), json!(i.is_square_free()));
    if i.is_square_free() {
        let (table, all_equal) = power_table(&i, m_max, limits)?;
        for (row, cmp) in rows.iter_mut().zip(table.as_array().expect("power table is an array")) {
            row.insert("equal".into(), cmp["equal"].clone());
            if let Some(w) = cmp.get("witness") {
                row.insert("witness".into(), w.clone());
            }
        }
        r.insert("all_equal".into(), json!(all_equal));
    }
    r.insert("powers".into(), rows.into_iter().map(Value::Object).collect());
    r.insert("variables".into(), json!(doc.variables));
    Ok(Report::plain(Value::Object(r)))
}

pub fn coloring(doc: &InputDocument, a: u32, b: u32, limits: &Limits) -> CommandResult {
    if a == 0 || b == 0 || b > a {
        return Err(CommandError::input("need 1 <= b <= a"));
    }
    let i = doc.ideal()?;
    let h = hypergraph_of(&i)?;
    let ctx = i.context();
    let mut r = Map::new();
    r.insert("a".into(), json!(a));
    r.insert("b".into(), json!(b));
    let mut alarms = Vec::new();
    match rainbow_coloring_with(&h, a, b, limits)? {
        None => {
            r.insert("found".into(), json!(false));
        }
        Some(c) => {
            c.validate(&h)?;
            let report = partite_lower_bound_check(&i, &c)?;
            if !report.holds {
                alarms.push(format!("({a}:{b}) coloring found but waldschmidt < {a}/{b}"));
            }
            let colors: Map<String, Value> = (0..ctx.len())
                .map(|v| (ctx.name(v).to_string(), json!(c.colors(v))))
                .collect();
            r.insert("found".into(), json!(true));
            r.insert("colors".into(), Value::Object(colors));
            r.insert(
                "color_classes".into(),
                c.color_classes().iter().map(|&s| render::names(s, ctx)).collect(),
            );
            r.insert(
                "lower_bound".into(),
                json!({
                    "bound": render::rational(&report.bound),
                    "waldschmidt": render::rational(&report.waldschmidt),
                    "max_multiplicity": report.max_multiplicity,
                    "holds": report.holds,
                }),
            );
        }
    }
    Ok(Report::with_alarms(r, alarms))
}

pub fn invariants(doc: &InputDocument) -> CommandResult {
    let i = doc.ideal()?;
    let h = hypergraph_of(&i)?;
    if i.is_zero() {
        return Err(sfpack::Error::ZeroIdeal.into());
    }
    let mut r = hypergraph_invariants(&h)?;
    r.insert("blocker".into(), Value::Object(hypergraph_invariants(&blocker(&h))?));
    Ok(Report::plain(Value::Object(r)))
}

pub fn probe(kind: &str, max_n: usize, limits: &Limits) -> CommandResult {
    let kind: ProbeKind = kind.parse()?;
    let p = conjecture_probe(kind, max_n, limits)?;
    let entry = |n: usize, gens: &[String], reason: &str| json!({"n": n, "generators": gens, "reason": reason});
    Ok(Report::plain(json!({
        "kind": p.kind.name(),
        "max_n": p.max_n,
        "instances": p.instances,
        "filtered": p.filtered,
        "candidates": p.candidates.iter().map(|c| entry(c.n, &c.generators, &c.reason)).collect::<Vec<_>>(),
        "skipped": p.skipped.iter().map(|s| entry(s.n, &s.generators, &s.reason)).collect::<Vec<_>>(),
        "verdict": p.verdict(),
    })))
}
