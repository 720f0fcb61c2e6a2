//! JSON forms: rationals as `"p/q"` strings, polynomials as term lists, matrices as nested rows.

use serde_json::{json, Value};

use super::laurent::{Monomial, MultiLaurent, VarNames};
use super::matrix::ExactMatrix;
use super::rational::{format_rational, int, parse_rational, Rational};
use super::ring::Ring;
use super::series::UniSeries;
use crate::error::{Error, Result};

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::Parse(format!("number {n} is not an integer; use a \"p/q\" string"))),
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

/// `{"variables": [...], "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}`, terms in descending order.
pub fn laurent_to_json(p: &MultiLaurent, names: &VarNames) -> Value {
    let width = names.len().max(p.arity());
    let vars: Vec<String> = (0..width).map(|i| names.name(i)).collect();
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let exps: Vec<i32> = (0..width).map(|i| m.exp(i)).collect();
            json!({ "exponents": exps, "coeff": format_rational(c) })
        })
        .collect();
    json!({ "variables": vars, "terms": terms })
}

pub fn laurent_from_json(v: &Value) -> Result<(MultiLaurent, VarNames)> {
    let names = match v.get("variables") {
        Some(Value::Array(a)) => VarNames::new(
            a.iter()
                .map(|x| x.as_str().map(str::to_owned).ok_or_else(|| Error::Parse("variable names must be strings".into())))
                .collect::<Result<Vec<_>>>()?,
        ),
        _ => VarNames::default(),
    };
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("polynomial needs a \"terms\" array".into()))?;
    let mut p = MultiLaurent::default();
    for t in terms {
        let exps = t
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("term needs \"exponents\"".into()))?
            .iter()
            .map(|e| e.as_i64().map(|e| e as i32).ok_or_else(|| Error::Parse("exponent must be an integer".into())))
            .collect::<Result<Vec<_>>>()?;
        let c = rational_from_json(t.get("coeff").ok_or_else(|| Error::Parse("term needs \"coeff\"".into()))?)?;
        p.add_term(Monomial::new(exps), c);
    }
    Ok((p, names))
}

pub fn series_to_json(s: &UniSeries<Rational>) -> Value {
    Value::Array(s.coeffs().iter().map(rational_to_json).collect())
}

/// `{"rows": r, "cols": c, "entries": [[...], ...]}`.
pub fn matrix_to_json<R: Ring>(m: &ExactMatrix<R>, entry: impl Fn(&R) -> Value) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(&entry).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

/// Accepts a bare array of rows or an object with an `entries` field.
pub fn rational_matrix_from_json(v: &Value) -> Result<ExactMatrix<Rational>> {
    let rows = match v {
        Value::Array(_) => v,
        Value::Object(_) => v.get("entries").ok_or_else(|| Error::Parse("matrix object needs \"entries\"".into()))?,
        _ => return Err(Error::Parse("matrix must be an array of rows".into())),
    };
    let rows = rows.as_array().ok_or_else(|| Error::Parse("entries must be an array".into()))?;
    let parsed = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(parsed)
}
