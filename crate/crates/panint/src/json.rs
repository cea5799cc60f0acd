//! JSON wire formats.
//!
//! Capacity: `{"points": ["x1", ...], "mu": [{"set": [0, 2], "value": 4.0}, ...]}`
//! with sets as strictly ascending 0-based index arrays and the empty set
//! omitted. Function: `{"values": [2, -2, 1, -1]}`. In exact mode values may
//! be decimal (or `p/q`) strings and are parsed exactly; emitted exact values
//! are strings of the same shape, so tables round-trip bit-identically.

use serde_json::{json, Map, Value as Json};

use crate::capacity::{validate_capacity, Capacity, PropertyReport};
use crate::error::{Error, Result};
use crate::function::RealFunction;
use crate::lp::DualCertificate;
use crate::pan::{IntegralResult, IntegralWitness, PartitionValuation};
use crate::report::{InequalityReport, VerificationReport, ViolationWitness};
use crate::space::{FiniteSpace, SubsetIndex};
use crate::value::{Mode, Value};
use crate::verify::{GoldenReport, SearchWitness};

pub fn value_to_json(v: &Value) -> Json {
    match v {
        Value::Exact(_) => Json::String(v.to_string()),
        Value::Float(x) => json!(x),
    }
}

pub fn value_from_json(j: &Json, mode: Mode) -> Result<Value> {
    match (j, mode) {
        (Json::Number(n), Mode::Float) => n
            .as_f64()
            .filter(|x| x.is_finite())
            .map(Value::Float)
            .ok_or_else(|| Error::Parse(format!("bad number `{n}`"))),
        (Json::Number(n), Mode::Exact) => {
            // route through the decimal literal so 6.5 means 13/2, not the
            // nearest dyadic
            Value::parse_exact(&n.to_string())
        }
        (Json::String(s), Mode::Exact) => Value::parse_exact(s),
        (Json::String(s), Mode::Float) => {
            Ok(Value::parse_exact(s)?.into_mode(Mode::Float))
        }
        _ => Err(Error::Parse(format!("expected a number, got `{j}`"))),
    }
}

fn set_to_json(s: SubsetIndex) -> Json {
    Json::Array(s.points().map(|p| json!(p)).collect())
}

fn set_from_json(j: &Json, n: usize) -> Result<SubsetIndex> {
    let arr = j
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a set array, got `{j}`")))?;
    let mut points = Vec::with_capacity(arr.len());
    for item in arr {
        let p = item
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("bad point index `{item}`")))?;
        points.push(p as usize);
    }
    SubsetIndex::from_points(&points, n)
}

pub fn capacity_to_json(mu: &Capacity) -> Json {
    let entries: Vec<Json> = mu
        .space()
        .nonempty_subsets()
        .map(|s| {
            json!({
                "set": set_to_json(s),
                "value": value_to_json(mu.value(s)),
            })
        })
        .collect();
    json!({
        "points": mu.space().labels(),
        "mu": entries,
    })
}

pub fn capacity_from_json(j: &Json, mode: Mode) -> Result<Capacity> {
    let obj = j
        .as_object()
        .ok_or_else(|| Error::Parse("capacity must be a JSON object".into()))?;
    let points = obj
        .get("points")
        .and_then(Json::as_array)
        .ok_or_else(|| Error::Parse("capacity needs a `points` array".into()))?;
    let labels: Vec<String> = points
        .iter()
        .map(|p| {
            p.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("point labels must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let space = FiniteSpace::new(labels)?;
    let entries = obj
        .get("mu")
        .and_then(Json::as_array)
        .ok_or_else(|| Error::Parse("capacity needs a `mu` array".into()))?;
    let mut table = Vec::with_capacity(entries.len());
    for entry in entries {
        let set = entry
            .get("set")
            .ok_or_else(|| Error::Parse("mu entry needs a `set`".into()))?;
        let value = entry
            .get("value")
            .ok_or_else(|| Error::Parse("mu entry needs a `value`".into()))?;
        table.push((set_from_json(set, space.n())?, value_from_json(value, mode)?));
    }
    validate_capacity(&space, &table)
}

pub fn function_to_json(f: &RealFunction) -> Json {
    json!({
        "values": f.values().iter().map(value_to_json).collect::<Vec<_>>(),
    })
}

pub fn function_from_json(j: &Json, space: &FiniteSpace, mode: Mode) -> Result<RealFunction> {
    let values = j
        .get("values")
        .and_then(Json::as_array)
        .ok_or_else(|| Error::Parse("function needs a `values` array".into()))?;
    let parsed: Vec<Value> = values
        .iter()
        .map(|v| value_from_json(v, mode))
        .collect::<Result<_>>()?;
    RealFunction::new(space.clone(), parsed)
}

pub fn partition_to_json(p: &PartitionValuation) -> Json {
    Json::Array(
        p.blocks
            .iter()
            .map(|(s, c)| {
                json!({
                    "set": set_to_json(*s),
                    "coefficient": value_to_json(c),
                })
            })
            .collect(),
    )
}

pub fn dual_to_json(d: &DualCertificate) -> Json {
    json!({
        "weights": d.weights.iter().map(value_to_json).collect::<Vec<_>>(),
        "objective": value_to_json(&d.objective),
    })
}

pub fn witness_to_json(w: &IntegralWitness) -> Json {
    match w {
        IntegralWitness::Partition(p) => partition_to_json(p),
        IntegralWitness::Levels(levels) => Json::Array(
            levels
                .iter()
                .map(|(inc, s)| {
                    json!({
                        "set": set_to_json(*s),
                        "increment": value_to_json(inc),
                    })
                })
                .collect(),
        ),
        IntegralWitness::Dual(d) => dual_to_json(d),
        IntegralWitness::Signed { positive, negative } => json!({
            "positive": partition_to_json(positive),
            "negative": partition_to_json(negative),
        }),
    }
}

pub fn integral_result_to_json(r: &IntegralResult, include_witness: bool) -> Json {
    let mut obj = Map::new();
    obj.insert("value".into(), value_to_json(&r.value));
    obj.insert("engine".into(), json!(r.engine.name()));
    obj.insert(
        "witness".into(),
        if include_witness {
            r.witness.as_ref().map(witness_to_json).unwrap_or(Json::Null)
        } else {
            Json::Null
        },
    );
    Json::Object(obj)
}

pub fn property_report_to_json(r: &PropertyReport) -> Json {
    json!({
        "property": r.property,
        "holds": r.holds,
        "witness": r.witness.map(|(a, b)| json!([set_to_json(a), set_to_json(b)])),
        "slack": value_to_json(&r.slack),
    })
}

pub fn violation_to_json(w: &ViolationWitness) -> Json {
    json!({
        "trial": w.trial,
        "capacity": capacity_to_json(&w.capacity),
        "functions": w.functions.iter().map(function_to_json).collect::<Vec<_>>(),
        "lhs": value_to_json(&w.lhs),
        "rhs": value_to_json(&w.rhs),
        "slack": value_to_json(&w.slack),
        "note": w.note,
    })
}

pub fn report_to_json(r: &VerificationReport) -> Json {
    json!({
        "suite": r.suite,
        "trials": r.trials,
        "failures": r.failures,
        "tolerance": r.tolerance,
        "seed": r.seed,
        "witnesses": r.witnesses.iter().map(violation_to_json).collect::<Vec<_>>(),
    })
}

pub fn inequality_to_json(r: &InequalityReport) -> Json {
    json!({
        "name": r.name,
        "lhs": value_to_json(&r.lhs),
        "rhs": value_to_json(&r.rhs),
        "holds": r.holds,
        "slack": value_to_json(&r.slack),
        "advisory": r.advisory,
    })
}

pub fn golden_to_json(r: &GoldenReport) -> Json {
    json!({
        "all_pass": r.all_pass(),
        "checks": r
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "expected": value_to_json(&c.expected),
                    "got": value_to_json(&c.got),
                    "pass": c.pass,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn search_witness_to_json(w: &SearchWitness) -> Json {
    json!({
        "found": true,
        "f": function_to_json(&w.f),
        "g": function_to_json(&w.g),
        "lhs": value_to_json(&w.lhs),
        "rhs": value_to_json(&w.rhs),
    })
}
