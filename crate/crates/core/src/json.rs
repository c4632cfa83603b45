//! JSON encodings for orbits, classes, class functions, polynomials and
//! series reports. Every integer that can grow (sizes, orders, rationals)
//! is written as a decimal string.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, PsiPolynomial, TruncatedSeries};
use crate::classes::{centralizer_order, class_size, OrbitTypeMultiset};
use crate::classfn::{ClassCatalog, ClassFunction};
use crate::genus::{GenusModel, GenusSeriesReport};
use crate::lattice::{OrderMode, TransitiveOrbit};
use crate::{Error, Result};

fn bad(what: impl Into<String>) -> Error {
    Error::Parse(what.into())
}

pub fn orbit_to_json(t: &TransitiveOrbit) -> Value {
    json!({ "h": t.h(), "size": t.size().to_string(), "hnf": t.hnf() })
}

/// Parses an orbit, requiring canonical form and a consistent size.
pub fn orbit_from_json(v: &Value) -> Result<TransitiveOrbit> {
    let rows = v
        .get("hnf")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("orbit needs an \"hnf\" array"))?;
    let hnf = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("hnf rows must be arrays"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("hnf entries must be integers")))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let t = TransitiveOrbit::from_hnf(hnf)?;
    if let Some(h) = v.get("h") {
        if h.as_u64() != Some(t.h() as u64) {
            return Err(bad(format!("orbit \"h\" {h} does not match its matrix")));
        }
    }
    if let Some(size) = v.get("size") {
        let s = size.as_str().ok_or_else(|| bad("orbit \"size\" must be a decimal string"))?;
        let s: BigInt = s.parse().map_err(|_| bad(format!("bad size {s:?}")))?;
        if &s != t.size() {
            return Err(bad(format!("orbit size {s} does not match determinant {}", t.size())));
        }
    }
    Ok(t)
}

pub fn mode_to_json(mode: OrderMode) -> Value {
    json!({ "p": mode.prime() })
}

pub fn mode_from_json(v: &Value) -> Result<OrderMode> {
    match v.get("p") {
        None | Some(Value::Null) => Ok(OrderMode::AllOrders),
        Some(p) => OrderMode::p_power(p.as_u64().ok_or_else(|| bad("\"p\" must be an integer"))?),
    }
}

pub fn class_type_to_json(class: &OrbitTypeMultiset) -> Value {
    Value::Array(
        class.entries().map(|(t, a)| json!({ "orbit": orbit_to_json(t), "mult": a })).collect(),
    )
}

/// A class record with its centralizer order and class size.
pub fn class_to_json(class: &OrbitTypeMultiset) -> Value {
    json!({
        "type": class_type_to_json(class),
        "centralizer_order": centralizer_order(class).to_string(),
        "class_size": class_size(class).to_string(),
    })
}

/// Reads the `"type"` list of a class record.
pub fn class_from_json(v: &Value, h: usize, mode: OrderMode) -> Result<OrbitTypeMultiset> {
    let items = v
        .get("type")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("class needs a \"type\" array"))?;
    let entries = items
        .iter()
        .map(|e| {
            let t = orbit_from_json(e.get("orbit").ok_or_else(|| bad("type entry needs \"orbit\""))?)?;
            let a = e
                .get("mult")
                .and_then(Value::as_u64)
                .and_then(|a| u32::try_from(a).ok())
                .filter(|&a| a > 0)
                .ok_or_else(|| bad("\"mult\" must be a positive integer"))?;
            Ok((t, a))
        })
        .collect::<Result<Vec<_>>>()?;
    OrbitTypeMultiset::from_entries(h, mode, entries)
}

pub fn class_function_to_json(chi: &ClassFunction<BigRational>) -> Value {
    let cat = chi.catalog();
    let values: Vec<Value> = chi
        .iter()
        .map(|(c, v)| json!({ "class": class_to_json(c), "value": format_rational(v) }))
        .collect();
    json!({ "h": cat.h(), "mode": mode_to_json(cat.mode()), "l": cat.degree(), "values": values })
}

/// Parses a class function; every class of the catalog must appear exactly once.
pub fn class_function_from_json(v: &Value) -> Result<ClassFunction<BigRational>> {
    let h = v.get("h").and_then(Value::as_u64).ok_or_else(|| bad("missing \"h\""))? as usize;
    let l = v.get("l").and_then(Value::as_u64).ok_or_else(|| bad("missing \"l\""))?;
    let mode = mode_from_json(v.get("mode").ok_or_else(|| bad("missing \"mode\""))?)?;
    let catalog = ClassCatalog::get(h, l, mode)?;
    let mut values: Vec<Option<BigRational>> = vec![None; catalog.len()];
    for item in v.get("values").and_then(Value::as_array).ok_or_else(|| bad("missing \"values\""))? {
        let class = class_from_json(item.get("class").ok_or_else(|| bad("value needs \"class\""))?, h, mode)?;
        let idx = catalog.index_of(&class)?;
        let value = item
            .get("value")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("\"value\" must be a rational string"))?;
        if values[idx].replace(parse_rational(value)?).is_some() {
            return Err(bad(format!("class {class} listed twice")));
        }
    }
    let values = values
        .into_iter()
        .zip(catalog.classes())
        .map(|(v, c)| v.ok_or_else(|| bad(format!("no value for class {c}"))))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(catalog, values)
}

/// Sorted monomial/coefficient pairs.
pub fn polynomial_to_json(p: &PsiPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                let factors: Vec<Value> = m
                    .factors()
                    .iter()
                    .map(|(s, e)| json!({ "family": s.family(), "orbit": orbit_to_json(s.orbit()), "power": e }))
                    .collect();
                json!({ "monomial": factors, "coeff": format_rational(c) })
            })
            .collect(),
    )
}

pub fn series_to_json(s: &TruncatedSeries<PsiPolynomial>) -> Value {
    Value::Array(s.coefficients().iter().map(polynomial_to_json).collect())
}

pub fn report_to_json(r: &GenusSeriesReport) -> Value {
    json!({
        "h": r.h,
        "p": r.mode.prime(),
        "precision": r.precision,
        "equal": r.equal,
        "first_mismatch": r.first_mismatch,
        "lhs": series_to_json(&r.lhs),
        "rhs": series_to_json(&r.rhs),
    })
}

/// A table model file: a list of `{"orbit": <orbit>, "psi": "num/den"}`.
pub fn table_model_from_json(v: &Value) -> Result<GenusModel> {
    let items = v.as_array().ok_or_else(|| bad("table model must be a JSON list"))?;
    let mut table = BTreeMap::new();
    let mut h = None;
    for item in items {
        let t = orbit_from_json(item.get("orbit").ok_or_else(|| bad("table entry needs \"orbit\""))?)?;
        if *h.get_or_insert(t.h()) != t.h() {
            return Err(bad("table entries have different h"));
        }
        let psi = item
            .get("psi")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("\"psi\" must be a rational string"))?;
        if table.insert(t.clone(), parse_rational(psi)?).is_some() {
            return Err(bad(format!("orbit {t} listed twice")));
        }
    }
    Ok(GenusModel::Table(table))
}
