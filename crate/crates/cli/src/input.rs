//! Input documents: JSON, or the compact text form with one square-free
//! monomial per line written as juxtaposed single-character variables.

use std::collections::HashSet;
use std::sync::Arc;

use serde_json::Value;
use sfpack::{Monomial, MonomialIdeal, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Declared variables and generators as `(variable, exponent)` lists, in
/// input order with duplicates removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<(String, u32)>>,
}

impl InputDocument {
    pub fn context(&self) -> Result<Arc<VariableContext>, InputError> {
        VariableContext::new(self.variables.iter().cloned()).map_err(|e| InputError(e.to_string()))
    }

    pub fn ideal(&self) -> Result<MonomialIdeal, InputError> {
        let ctx = self.context()?;
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; ctx.len()];
                for (name, e) in g {
                    // names were validated during parsing
                    exps[ctx.index_of(name).expect("declared variable")] = *e;
                }
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(ctx, gens).map_err(|e| InputError(e.to_string()))
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_compact(text)
    }
}

fn parse_json(text: &str) -> Result<InputDocument, InputError> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        InputError(format!(
            "malformed JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| InputError("top level must be an object".into()))?;
    for key in obj.keys() {
        if key != "variables" && key != "generators" {
            return Err(InputError(format!("unknown field `{key}`")));
        }
    }
    let vars = obj
        .get("variables")
        .ok_or_else(|| InputError("missing field `variables`".into()))?
        .as_array()
        .ok_or_else(|| InputError("`variables` must be an array of strings".into()))?;
    let mut variables = Vec::with_capacity(vars.len());
    for (i, v) in vars.iter().enumerate() {
        let name = v
            .as_str()
            .ok_or_else(|| InputError(format!("variables[{i}] must be a string")))?;
        if name.is_empty() {
            return Err(InputError(format!("variables[{i}] is empty")));
        }
        if variables.iter().any(|w: &String| w == name) {
            return Err(InputError(format!("variables[{i}]: `{name}` declared twice")));
        }
        variables.push(name.to_string());
    }
    if variables.is_empty() {
        return Err(InputError("`variables` must not be empty".into()));
    }
    let gens = obj
        .get("generators")
        .ok_or_else(|| InputError("missing field `generators`".into()))?
        .as_array()
        .ok_or_else(|| InputError("`generators` must be an array".into()))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let items = g
            .as_array()
            .ok_or_else(|| InputError(format!("generators[{i}] must be an array")))?;
        if items.is_empty() {
            return Err(InputError(format!("generators[{i}] is empty")));
        }
        let mut mono: Vec<(String, u32)> = Vec::new();
        for (j, item) in items.iter().enumerate() {
            let at = format!("generators[{i}][{j}]");
            let (name, exp) = match item {
                Value::String(s) => (s.as_str(), 1u64),
                Value::Array(pair) if pair.len() == 2 => {
                    let name = pair[0]
                        .as_str()
                        .ok_or_else(|| InputError(format!("{at}[0] must be a variable name")))?;
                    let exp = pair[1]
                        .as_u64()
                        .ok_or_else(|| InputError(format!("{at}[1] must be a non-negative integer")))?;
                    (name, exp)
                }
                _ => {
                    return Err(InputError(format!(
                        "{at} must be a variable name or a [name, exponent] pair"
                    )))
                }
            };
            if !variables.iter().any(|v| v == name) {
                return Err(InputError(format!("{at}: undeclared variable `{name}`")));
            }
            if exp == 0 {
                return Err(InputError(format!("{at}: exponent must be positive")));
            }
            let exp = u32::try_from(exp).map_err(|_| InputError(format!("{at}: exponent too large")))?;
            if mono.iter().any(|(n, _)| n == name) {
                return Err(InputError(format!("{at}: variable `{name}` repeated in one generator")));
            }
            mono.push((name.to_string(), exp));
        }
        push_unique(&mut generators, mono, &variables);
    }
    Ok(InputDocument { variables, generators })
}

fn push_unique(generators: &mut Vec<Vec<(String, u32)>>, mut mono: Vec<(String, u32)>, variables: &[String]) {
    let pos = |n: &str| variables.iter().position(|v| v == n);
    mono.sort_by_key(|(n, _)| pos(n));
    if !generators.contains(&mono) {
        generators.push(mono);
    }
}

/// Compact form: `#` starts a comment, an optional `vars: a b c` line
/// declares the variables (otherwise the letters used, sorted).
fn parse_compact(text: &str) -> Result<InputDocument, InputError> {
    let mut declared: Option<Vec<String>> = None;
    let mut words: Vec<(usize, String)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if declared.is_some() {
                return Err(InputError(format!("line {}: variables declared twice", k + 1)));
            }
            declared = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        if line.contains(char::is_whitespace) {
            return Err(InputError(format!(
                "line {}: expected one monomial such as `abc`, got `{line}`",
                k + 1
            )));
        }
        words.push((k + 1, line.to_string()));
    }
    let variables = match declared {
        Some(v) => {
            if let Some(bad) = v.iter().find(|n| n.chars().count() != 1) {
                return Err(InputError(format!(
                    "compact form needs single-character variables, got `{bad}`"
                )));
            }
            v
        }
        None => {
            let mut letters: Vec<char> = words.iter().flat_map(|(_, w)| w.chars()).collect();
            letters.sort_unstable();
            letters.dedup();
            letters.into_iter().map(String::from).collect()
        }
    };
    if variables.is_empty() {
        return Err(InputError("no variables and no generators".into()));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = variables.iter().find(|v| !seen.insert(v.as_str())) {
        return Err(InputError(format!("variable `{dup}` declared twice")));
    }
    let mut generators = Vec::new();
    for (line, w) in words {
        let mut mono: Vec<(String, u32)> = Vec::new();
        for c in w.chars() {
            let name = c.to_string();
            if !variables.contains(&name) {
                return Err(InputError(format!("line {line}: undeclared variable `{c}`")));
            }
            if mono.iter().any(|(n, _)| *n == name) {
                return Err(InputError(format!(
                    "line {line}: `{w}` repeats `{c}`; the compact form is square-free only"
                )));
            }
            mono.push((name, 1));
        }
        push_unique(&mut generators, mono, &variables);
    }
    Ok(InputDocument { variables, generators })
}
