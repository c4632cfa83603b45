use orbgenus::algebra::format_rational;
use orbgenus::json::polynomial_to_json;
use orbgenus::PsiPolynomial;
use serde_json::Value;

/// A coefficient for printing: a plain rational when it is constant.
pub fn coefficient_text(c: &PsiPolynomial) -> String {
    match c.as_constant() {
        Some(r) => format_rational(&r),
        None => c.to_string(),
    }
}

pub fn coefficient_json(c: &PsiPolynomial) -> Value {
    match c.as_constant() {
        Some(r) => Value::String(format_rational(&r)),
        None => polynomial_to_json(c),
    }
}

pub fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("JSON values serialize"))
}
