use std::fs;

use num_bigint::BigInt;
use orbgenus::json::table_model_from_json;
use orbgenus::lattice::OrderMode;
use orbgenus::GenusModel;

use crate::{Failure, Level, MAX_DEGREE, MAX_H};

/// Validates `--h` and `--p`.
pub fn mode(level: Level) -> Result<(usize, OrderMode), Failure> {
    if level.h < 1 || level.h > MAX_H {
        return Err(Failure::Usage(format!("--h must be between 1 and {MAX_H}")));
    }
    let mode = match level.p {
        None => OrderMode::AllOrders,
        Some(p) => OrderMode::p_power(p).map_err(|_| Failure::Usage(format!("--p {p} is not prime")))?,
    };
    Ok((level.h, mode))
}

pub fn degree(flag: &str, n: u64) -> Result<u64, Failure> {
    if n > MAX_DEGREE {
        return Err(Failure::Usage(format!("{flag} must be at most {MAX_DEGREE}")));
    }
    Ok(n)
}

/// Parses `symbolic[:family]`, `integer:<d>` or `table:<path>`.
pub fn parse_model(spec: &str, h: usize) -> Result<GenusModel, Failure> {
    let (kind, arg) = match spec.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (spec, None),
    };
    match (kind, arg) {
        ("symbolic", None) => Ok(GenusModel::symbolic("x")),
        ("symbolic", Some(f)) if !f.is_empty() && f.chars().all(|c| c.is_ascii_alphanumeric()) => {
            Ok(GenusModel::symbolic(f))
        }
        ("integer", Some(d)) => d
            .parse::<BigInt>()
            .map(GenusModel::Integer)
            .map_err(|_| Failure::Usage(format!("bad integer model {d:?}"))),
        ("table", Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read table {path}: {e}")))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("table {path} is not JSON: {e}")))?;
            let model = table_model_from_json(&value)?;
            if let GenusModel::Table(t) = &model {
                if let Some(bad) = t.keys().find(|o| o.h() != h) {
                    return Err(Failure::Usage(format!("table orbit {bad} does not have h = {h}")));
                }
            }
            Ok(model)
        }
        _ => Err(Failure::Usage(format!(
            "unknown model {spec:?}; expected symbolic[:family], integer:<d> or table:<path>"
        ))),
    }
}
