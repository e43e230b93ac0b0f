//! Canonical JSON: object keys are sorted (serde_json's default map), and
//! polynomials are `{variables, terms}` with terms `[exponents, num, den]`
//! in decreasing lex order over the sorted variable list.

use mdlab::hilbert::MonomialIdeal;
use mdlab::{Polynomial, TermOrder, Variable};
use serde_json::{json, Map, Value};

pub fn polynomial(p: &Polynomial) -> Value {
    let vars: Vec<Variable> = p.variables();
    let terms: Vec<Value> = p
        .sorted_terms(&TermOrder::lex())
        .into_iter()
        .map(|(m, c)| {
            let exps: Vec<u32> = vars.iter().map(|&v| m.exponent(v)).collect();
            json!([exps, c.numer().to_string(), c.denom().to_string()])
        })
        .collect();
    json!({
        "text": p.to_string(),
        "variables": vars.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "terms": terms,
    })
}

pub fn polynomials(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(polynomial).collect())
}

pub fn monomial_ideal(j: &MonomialIdeal) -> Value {
    Value::Array(j.generators().iter().map(|m| Value::String(m.to_string())).collect())
}

/// `{command, inputs, seed, results, timings}`.
pub fn report(command: &str, inputs: Value, seed: Option<u64>, results: Value, timings: Map<String, Value>) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "seed": seed,
        "results": results,
        "timings": timings,
    })
}
