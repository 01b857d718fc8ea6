//! Text, JSON and CSV forms of polynomials and records.

use std::str::FromStr;

use num_bigint::BigInt;
use parhiggs_core::LaurentPoly;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

/// `[{"deg": k, "coeff": "c"}, ...]` by ascending degree.
pub fn poly_terms(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!({ "deg": e, "coeff": c.to_string() })).collect())
}

pub fn poly_from_terms(v: &Value) -> CliResult<LaurentPoly> {
    let bad = || CliError::Io("malformed polynomial term list".into());
    let terms = v.as_array().ok_or_else(bad)?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let deg = t.get("deg").and_then(Value::as_i64).ok_or_else(bad)?;
        let coeff = t.get("coeff").and_then(Value::as_str).ok_or_else(bad)?;
        out.push((deg, BigInt::from_str(coeff).map_err(|_| bad())?));
    }
    Ok(LaurentPoly::from_terms(out))
}

/// The polynomial object: terms, top degree and Euler characteristic.
pub fn poly_object(p: &LaurentPoly) -> Value {
    json!({
        "poincare": poly_terms(p),
        "degree": p.degree(),
        "euler_char": p.eval_at_minus_one().to_string(),
    })
}

/// Top-level document for a single polynomial result.
pub fn poly_document(params: &Value, p: &LaurentPoly) -> Value {
    let mut doc = poly_object(p);
    doc["params"] = params.clone();
    doc
}

pub fn csv(p: &LaurentPoly) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (e, c) in p.terms() {
        out.push_str(&format!("{e},{c}\n"));
    }
    out
}

/// Labelled polynomials as `type,degree,coefficient` rows.
pub fn csv_labelled(rows: &[(&str, &LaurentPoly)]) -> String {
    let mut out = String::from("type,degree,coefficient\n");
    for (label, p) in rows {
        for (e, c) in p.terms() {
            out.push_str(&format!("{label},{e},{c}\n"));
        }
    }
    out
}

/// Pretty JSON with sorted keys, so parsing and re-serializing reproduces
/// the same bytes.
pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
