//! Canonical JSON building blocks and the plain-text line format.
//!
//! Rationals are always strings (`"3"`, `"5/3"`), counts are JSON integers,
//! monomials are `[[variable, exponent], ..]` in variable order, and keys come
//! out sorted because `serde_json::Map` is ordered.

use serde_json::{json, Map, Value};
use sfpack::lp::{format_rational, Rational};
use sfpack::{Monomial, MonomialIdeal, VariableContext, VertexSet};

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn point(p: &[Rational]) -> Value {
    Value::Array(p.iter().map(rational).collect())
}

pub fn monomial(m: &Monomial, ctx: &VariableContext) -> Value {
    Value::Array(
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| json!([ctx.name(i), e]))
            .collect(),
    )
}

/// Variable names of a set, in variable order.
pub fn names(s: VertexSet, ctx: &VariableContext) -> Value {
    Value::Array(s.iter().map(|v| Value::String(ctx.name(v).to_string())).collect())
}

/// Generators by degree, then lexicographically.
fn ordered(ideal: &MonomialIdeal) -> Vec<&Monomial> {
    let mut gens: Vec<&Monomial> = ideal.generators().iter().collect();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens
}

/// `{"generators": [...], "words": [...]}` for an ideal.
pub fn ideal(ideal: &MonomialIdeal) -> Map<String, Value> {
    let ctx = ideal.context();
    let gens = ordered(ideal);
    let mut out = Map::new();
    out.insert("generators".into(), gens.iter().map(|g| monomial(g, ctx)).collect());
    out.insert(
        "words".into(),
        gens.iter().map(|g| Value::String(g.display(ctx))).collect(),
    );
    out
}

pub fn words(ms: &[Monomial], ctx: &VariableContext) -> Value {
    ms.iter().map(|m| Value::String(m.display(ctx))).collect()
}

/// One `path: value` line per scalar, in key order. Arrays of scalars are
/// written on one line; nested containers extend the path.
pub fn text(value: &Value) -> String {
    let mut out = String::new();
    walk(value, String::new(), &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flat(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(|x| scalar(x).or_else(|| inline(x))).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        other => scalar(other),
    }
}

// variable-exponent pairs and short lists stay inline
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            let parts: Option<Vec<String>> = items.iter().map(|x| scalar(x).or_else(|| inline(x))).collect();
            parts.map(|p| format!("[{}]", p.join(" ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, path: String, out: &mut String) {
    if let Some(s) = flat(v) {
        out.push_str(&format!("{}: {s}\n", if path.is_empty() { "value" } else { &path }));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                walk(x, p, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str(&format!("{path}: []\n"));
            }
            for (i, x) in items.iter().enumerate() {
                walk(x, format!("{path}[{i}]"), out);
            }
        }
        _ => unreachable!("scalars are handled by flat"),
    }
}
