//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Criterion 1 drives the `sfpack` binary; the rest call the library over
//! shared instance pools so that "every instance in any suite" checks (4, 6, 9)
//! see the same ideals as the suites that generated them.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use sfpack::family::{bipartite_graphs, for_each_edge_list, FamilySpec};
use sfpack::hypergraph::{incidence_matrix, prime_matrix};
use sfpack::lp::rational::int;
use sfpack::lp::{solve_ip, solve_lp, IpOptions, Program, Rational};
use sfpack::packing::{
    equidim_duality_check, forward_direction_check, is_packed_with, packed_consequences, packing_number,
    partite_lower_bound_check, rainbow_coloring_with, transversal_number, uniform_packing_theorem_check, Check,
};
use sfpack::polyhedra::{default_box_bound, lattice_disagreement, waldschmidt, waldschmidt_limit_check_capped};
use sfpack::sets::minimal_family;
use sfpack::{
    alexander_dual, blocker, edge_ideal, hypergraph_of, Error, Hypergraph, Limits, MonomialIdeal, VariableContext,
    VertexSet,
};

const Q6_JSON: &str =
    r#"{"variables":["a","b","c","d","e","f"],"generators":[["a","b","c"],["a","e","f"],["c","d","e"],["b","d","f"]]}"#;

type Verdict = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Option<Duration>, Box<dyn Fn() -> Verdict + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: sfpack::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ideal(n: usize, edges: &[VertexSet]) -> MonomialIdeal {
    MonomialIdeal::from_supports(VariableContext::letters(n).unwrap(), edges).unwrap()
}

fn random_edges(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> Vec<VertexSet> {
    let k = rng.gen_range(1..=max_edges);
    minimal_family((0..k).map(|_| VertexSet(rng.gen_range(1u64..(1u64 << n)))).collect())
}

fn random_bipartite(rng: &mut ChaCha8Rng) -> (usize, Vec<VertexSet>) {
    loop {
        let n = rng.gen_range(2..=8);
        let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if side[u] != side[v] && rng.gen_bool(0.5) {
                    edges.push(VertexSet::from_indices([u, v]));
                }
            }
        }
        if !edges.is_empty() {
            return (n, edges);
        }
    }
}

/// Instances shared between criteria, grouped by the suite that produced them.
struct Pools {
    q6: Vec<MonomialIdeal>,
    bipartite: Vec<Hypergraph>,
    hypergraphs: Vec<Hypergraph>,
    waldschmidt: Vec<MonomialIdeal>,
    duality: Vec<MonomialIdeal>,
    family: Vec<MonomialIdeal>,
    uniform: Vec<Hypergraph>,
}

impl Pools {
    fn build() -> Pools {
        let q6 =
            MonomialIdeal::from_words(VariableContext::letters(6).unwrap(), &["abc", "aef", "cde", "bdf"]).unwrap();
        let q6_dual = alexander_dual(&q6).unwrap();

        let mut bipartite = Vec::new();
        for n in 1..=7 {
            bipartite.extend(bipartite_graphs(n).unwrap().into_iter().filter(|h| !h.is_edgeless()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..500 {
            let (n, edges) = random_bipartite(&mut rng);
            bipartite.push(Hypergraph::new(VariableContext::letters(n).unwrap(), edges).unwrap());
        }

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let hypergraphs = (0..500)
            .map(|_| {
                let n = rng.gen_range(1..=8);
                Hypergraph::new(VariableContext::letters(n).unwrap(), random_edges(&mut rng, n, 10)).unwrap()
            })
            .collect();

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let waldschmidt = (0..100)
            .map(|_| {
                let n = rng.gen_range(1..=6);
                ideal(n, &random_edges(&mut rng, n, 8))
            })
            .collect();

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let duality = (0..200)
            .map(|_| {
                let n = rng.gen_range(1..=7);
                ideal(n, &random_edges(&mut rng, n, 8))
            })
            .collect();

        let mut family = Vec::new();
        for n in 1..=6 {
            for_each_edge_list(&FamilySpec::hypergraphs(n, 6), |e| {
                if !e.is_empty() {
                    family.push(ideal(n, e));
                }
            })
            .unwrap();
        }

        let mut uniform = Vec::new();
        for n in 1..=6 {
            for k in 1..=n {
                for_each_edge_list(&FamilySpec::uniform(n, k, usize::MAX), |e| {
                    if !e.is_empty() {
                        uniform.push(Hypergraph::new(VariableContext::letters(n).unwrap(), e.to_vec()).unwrap());
                    }
                })
                .unwrap();
            }
        }

        Pools {
            q6: vec![q6, q6_dual],
            bipartite,
            hypergraphs,
            waldschmidt,
            duality,
            family,
            uniform,
        }
    }

    /// Every ideal from every suite.
    fn all(&self) -> Vec<MonomialIdeal> {
        let mut out = self.q6.clone();
        out.extend(self.bipartite.iter().map(edge_ideal));
        out.extend(self.hypergraphs.iter().map(edge_ideal));
        out.extend(self.waldschmidt.iter().cloned());
        out.extend(self.duality.iter().cloned());
        out.extend(self.family.iter().cloned());
        out.extend(self.uniform.iter().map(edge_ideal));
        out
    }
}

fn sfpack(args: &[&str], stdin: &str) -> Result<(i32, Value), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sfpack"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    let v = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), v))
}

fn q6_worked_example() -> Verdict {
    let (code, r) = sfpack(&["analyze"], Q6_JSON)?;
    ensure(code == 0, || format!("analyze exited {code}: {r}"))?;
    ensure(r["height"] == json!(2), || format!("height {}", r["height"]))?;
    let primes = r["prime_decomposition"].as_array().map_or(0, |p| p.len());
    ensure(primes == 7, || format!("{primes} primes"))?;
    for (field, want) in [
        ("konig", json!(false)),
        ("packed", json!(false)),
        ("np_equals_sp", json!(true)),
        ("sp_integral", json!(true)),
        ("alpha", json!(3)),
        ("waldschmidt", json!("3")),
        ("failing_minor", json!({"delete": [], "contract": []})),
    ] {
        ensure(r[field] == want, || format!("{field} = {}, want {want}", r[field]))?;
    }

    let (code, p) = sfpack(&["packing", "--all-failing"], Q6_JSON)?;
    ensure(code == 0, || format!("packing exited {code}"))?;
    ensure(p["failing_minors"] == json!([{"delete": [], "contract": []}]), || {
        format!("failing minors {}", p["failing_minors"])
    })?;
    ensure(p["minors_checked"] == json!(729), || {
        format!("minors checked {}", p["minors_checked"])
    })?;

    let (code, d) = sfpack(&["dual"], Q6_JSON)?;
    ensure(code == 0, || format!("dual exited {code}"))?;
    let want = json!(["ad", "be", "cf", "abc", "aef", "bdf", "cde"]);
    ensure(d["words"] == want, || format!("dual generators {}", d["words"]))?;
    ensure(
        d["packed"] == json!(true) && d["equidimensional"] == json!(true),
        || format!("dual packed {} equidimensional {}", d["packed"], d["equidimensional"]),
    )?;
    Ok("ht 2, 7 primes, only (∅,∅) fails among 729 patterns, α = α̂ = 3, dual packed".into())
}

fn konig_egervary(pools: &Pools) -> Verdict {
    for h in &pools.bipartite {
        let (tau, pi) = (transversal_number(h.edges()), packing_number(h.edges()));
        ensure(tau == pi, || format!("τ = {tau}, π = {pi} on {:?}", edge_ideal(h)))?;
    }
    Ok(format!(
        "τ = π on {} bipartite graphs (all classes n ≤ 7 plus 500 random n ≤ 8)",
        pools.bipartite.len()
    ))
}

fn duality_chain(pools: &Pools, limits: &Limits) -> Verdict {
    let opts = IpOptions {
        max_vars: limits.max_ip_vars,
        ..IpOptions::default()
    };
    for h in &pools.hypergraphs {
        let tau = lib(solve_ip(&Program::transversal(h).integral(), &opts))?.value;
        let pi = lib(solve_ip(&Program::packing(h).integral(), &opts))?.value;
        let tau_f = lib(solve_lp(&Program::transversal(h)))?.value;
        let pi_f = lib(solve_lp(&Program::packing(h)))?.value;
        ensure(pi <= pi_f && pi_f == tau_f && tau_f <= tau, || {
            format!("π {pi} π_f {pi_f} τ_f {tau_f} τ {tau} on {:?}", edge_ideal(h))
        })?;
        ensure(tau == int(transversal_number(h.edges()) as i64), || {
            "IP and search disagree on τ".into()
        })?;
    }
    Ok(format!(
        "π ≤ π_f = τ_f ≤ τ on {} random hypergraphs",
        pools.hypergraphs.len()
    ))
}

fn lattice_agreement(pools: &Pools) -> Verdict {
    let mut ideals = pools.q6.clone();
    ideals.extend(pools.bipartite.iter().map(edge_ideal));
    ideals.extend(pools.hypergraphs.iter().map(edge_ideal));
    for i in &ideals {
        if let Some(x) = lib(lattice_disagreement(i, default_box_bound(i)))? {
            return Err(format!("NP and SP differ at {x:?} for {i:?}"));
        }
    }
    Ok(format!("agreement on the default box for {} instances", ideals.len()))
}

fn waldschmidt_bound(pools: &Pools) -> Verdict {
    let mut tight = 0;
    for i in &pools.waldschmidt {
        let w = lib(waldschmidt(i))?;
        let ratios = lib(waldschmidt_limit_check_capped(
            i,
            3,
            sfpack::polyhedra::DEFAULT_POWER_GENERATORS,
        ))?;
        for (m, q) in &ratios {
            ensure(w <= *q, || format!("α̂ = {w} > α(I^({m}))/{m} = {q} for {i:?}"))?;
        }
        tight += ratios.iter().any(|(_, q)| *q == w) as usize;
    }
    Ok(format!(
        "α̂ ≤ α(I^(m))/m for m ≤ 3 on {} ideals; attained by some m ≤ 3 on {tight}",
        pools.waldschmidt.len()
    ))
}

fn objectives(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![int(1); n]];
    while out.len() < 20 {
        out.push((0..n).map(|_| int(rng.gen_range(0..=4))).collect());
    }
    out
}

fn packed_theorems(pools: &Pools, limits: &Limits) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut packed, mut skipped) = (0, 0);
    for i in pools.all() {
        let verdict = match is_packed_with(&i, limits.max_packing_vars) {
            Ok(v) => v,
            Err(Error::GuardExceeded { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        if !verdict.packed {
            continue;
        }
        packed += 1;
        let r = lib(packed_consequences(&i, &objectives(&mut rng, i.nvars()), limits))?;
        ensure(r.holds(), || format!("packed {i:?} violates a consequence: {r:?}"))?;
    }
    ensure(skipped == 0, || {
        format!("{skipped} instances exceeded the packing guard")
    })?;
    Ok(format!(
        "NP = SP, SP integral, α = α̂ and 20 LP objectives agree on all {packed} packed instances \
         ({} in the exhaustive n ≤ 6 family)",
        pools.family.len()
    ))
}

fn duality_identities(pools: &Pools) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in &pools.duality {
        let n = i.nvars();
        let d = lib(alexander_dual(i))?;
        ensure(lib(alexander_dual(&d))? == *i, || {
            format!("dual not an involution on {i:?}")
        })?;
        let h = lib(hypergraph_of(i))?;
        let hd = lib(hypergraph_of(&d))?;
        ensure(lib(prime_matrix(&d))? == incidence_matrix(&h).transpose(), || {
            format!("A^∨ != Bᵀ for {i:?}")
        })?;
        ensure(incidence_matrix(&hd) == lib(prime_matrix(i))?.transpose(), || {
            format!("B^∨ != Aᵀ for {i:?}")
        })?;
        ensure(blocker(&h) == hd, || format!("blocker differs from the dual for {i:?}"))?;
        for _ in 0..5 {
            let pattern: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let zero: VertexSet = (0..n).filter(|&v| pattern[v] == 1).collect();
            let one: VertexSet = (0..n).filter(|&v| pattern[v] == 2).collect();
            let lhs = lib(alexander_dual(&lib(i.substitute(zero, one))?))?;
            let rhs = lib(d.substitute(one, zero))?;
            ensure(lhs == rhs, || format!("minor duality fails for {i:?} at {pattern:?}"))?;
        }
    }
    Ok(format!(
        "involution, A^∨ = Bᵀ, B^∨ = Aᵀ and minor duality on {} instances",
        pools.duality.len()
    ))
}

fn section_five(pools: &Pools, limits: &Limits) -> Verdict {
    let (mut colorings, mut guarded) = (0, 0);
    let mut check_coloring = |i: &MonomialIdeal, h: &Hypergraph, a: u32, b: u32| -> Result<(), String> {
        match rainbow_coloring_with(h, a, b, limits) {
            Ok(Some(c)) => {
                colorings += 1;
                ensure(c.is_valid_for(h), || format!("invalid ({a}:{b}) coloring of {i:?}"))?;
                let r = lib(partite_lower_bound_check(i, &c))?;
                ensure(r.holds, || {
                    format!("({a}:{b}) coloring of {i:?} but α̂ = {}", r.waldschmidt)
                })
            }
            Ok(None) => Ok(()),
            Err(Error::GuardExceeded { .. }) => {
                guarded += 1;
                Ok(())
            }
            Err(e) => Err(e.to_string()),
        }
    };
    for i in &pools.family {
        let h = lib(hypergraph_of(i))?;
        for (a, b) in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (5, 3)] {
            check_coloring(i, &h, a, b)?;
        }
    }

    let mut uniform_packed = 0;
    for h in &pools.uniform {
        if let Check::Checked(r) = lib(uniform_packing_theorem_check(h, limits))? {
            uniform_packed += 1;
            ensure(r.holds(), || format!("uniform packed {:?} fails: {r:?}", edge_ideal(h)))?;
            check_coloring(&edge_ideal(h), h, r.alpha as u32, 1)?;
        }
    }

    let mut equidim = 0;
    let mut ideals = pools.family.clone();
    ideals.extend(pools.uniform.iter().map(edge_ideal));
    for i in &ideals {
        if let Check::Checked(r) = lib(equidim_duality_check(i, limits))? {
            equidim += 1;
            ensure(r.holds(), || {
                format!("{i:?}: packed {} but dual packed {}", r.packed, r.dual_packed)
            })?;
        }
    }
    ensure(guarded == 0, || format!("{guarded} coloring searches hit a guard"))?;
    Ok(format!(
        "{colorings} colorings give valid lower bounds; {uniform_packed} uniform packed and \
         {equidim} doubly-equidimensional instances agree"
    ))
}

fn forward_direction(pools: &Pools, limits: &Limits) -> Verdict {
    let (mut checked, mut unequal, mut skipped) = (0, 0, 0);
    for i in pools.all() {
        match forward_direction_check(&i, limits) {
            Ok(r) => {
                checked += 1;
                unequal += !r.all_equal() as usize;
                ensure(r.consistent(), || format!("{i:?}: {r:?}"))?;
            }
            Err(Error::GuardExceeded { .. }) => skipped += 1,
            Err(e) => return Err(format!("{i:?}: {e}")),
        }
    }
    ensure(skipped == 0, || format!("{skipped} instances exceeded a guard"))?;
    Ok(format!(
        "{checked} instances consistent; {unequal} with I^(m) != I^m for some m ≤ 3, none packed"
    ))
}

fn main() {
    let limits = Limits::default();
    let start = Instant::now();
    let pools = Pools::build();
    println!(
        "instance pools built in {:.1} s ({} ideals)",
        start.elapsed().as_secs_f64(),
        pools.all().len()
    );

    let budget = |s: u64| Some(Duration::from_secs(s));
    let criteria: Vec<Criterion> = vec![
        (1, "Q6 worked example", budget(10), Box::new(q6_worked_example)),
        (
            2,
            "König–Egerváry on bipartite graphs",
            budget(60),
            Box::new(|| konig_egervary(&pools)),
        ),
        (
            3,
            "duality chain",
            budget(120),
            Box::new(|| duality_chain(&pools, &limits)),
        ),
        (
            4,
            "NP and SP lattice points",
            budget(60),
            Box::new(|| lattice_agreement(&pools)),
        ),
        (
            5,
            "Waldschmidt LP versus symbolic powers",
            budget(300),
            Box::new(|| waldschmidt_bound(&pools)),
        ),
        (
            6,
            "packed consequences as alarms",
            budget(900),
            Box::new(|| packed_theorems(&pools, &limits)),
        ),
        (
            7,
            "Alexander duality identities",
            budget(60),
            Box::new(|| duality_identities(&pools)),
        ),
        (
            8,
            "colorings, uniform packing, equidimensional duality",
            budget(600),
            Box::new(|| section_five(&pools, &limits)),
        ),
        (
            9,
            "known forward direction",
            None,
            Box::new(|| forward_direction(&pools, &limits)),
        ),
    ];

    let mut failures = 0;
    for (k, name, limit, run) in criteria {
        let t = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = t.elapsed();
        let verdict = match (verdict, limit) {
            (Ok(_), Some(l)) if elapsed > l => {
                Err(format!("took {:.1} s, budget {} s", elapsed.as_secs_f64(), l.as_secs()))
            }
            (v, _) => v,
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failures += verdict.is_err() as usize;
        println!("criterion {k} {tag}  {name}: {detail} [{:.1} s]", elapsed.as_secs_f64());
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
