//! JSON encodings of exact data: rationals as `"p/q"` strings, Gaussian
//! rationals as `{"re", "im"}` objects, matrices with a field tag.

use serde_json::{json, Value};
use symmpair_core::field::{fmt_q, parse_q};
use symmpair_core::mpoly::MPoly;
use symmpair_core::rootsys::{Flat, TypeLabel};
use symmpair_core::sympair::{FieldTag, M};
use symmpair_core::{Error, Qi, Result, Ring, Q};

pub fn q(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn qvec(v: &[Q]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

pub fn qi(x: &Qi) -> Value {
    json!({ "re": fmt_q(&x.re), "im": fmt_q(&x.im) })
}

pub fn type_label(t: &TypeLabel) -> Value {
    Value::String(t.to_string())
}

/// Entries are plain strings when the field is `Q`.
pub fn matrix(m: &M, field: FieldTag) -> Value {
    let field = if field == FieldTag::Q && !m.entries().iter().all(Qi::is_real) { FieldTag::Qi } else { field };
    let rows: Vec<Value> = m
        .to_rows()
        .iter()
        .map(|r| {
            Value::Array(
                r.iter()
                    .map(|x| match field {
                        FieldTag::Q => q(&x.re),
                        FieldTag::Qi => qi(x),
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "field": field.name(), "rows": rows })
}

/// Tag a real-entry matrix as `Q`, anything else as `Qi`.
pub fn matrix_auto(m: &M) -> Value {
    matrix(m, FieldTag::Q)
}

pub fn flat(f: &Flat) -> Value {
    json!({
        "basis": f.subspace_basis.iter().map(|v| qvec(v)).collect::<Vec<_>>(),
        "vanishing_roots": f.vanishing_roots,
        "canonical_form": f.canonical_form,
        "orbit_size": f.orbit_size,
    })
}

/// `3*x0^2*x1 - x2 + 1`, terms in monomial order.
pub fn mpoly_string(p: &MPoly<Qi>, var: &str) -> String {
    let mut out = String::new();
    for (mono, c) in p.terms() {
        let vars: Vec<String> = mono
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("{var}{i}") } else { format!("{var}{i}^{e}") })
            .collect();
        let (neg, coeff) = if c.is_real() && c.re < Q::zero() { (true, Qi::real(-c.re.clone())) } else { (false, c.clone()) };
        let cs = if coeff.is_real() { coeff.to_string() } else { format!("({coeff})") };
        let body = match (vars.is_empty(), coeff.is_one()) {
            (true, _) => cs,
            (false, true) => vars.join("*"),
            (false, false) => format!("{cs}*{}", vars.join("*")),
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_scalar(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s).ok_or_else(|| parse_err(format!("not a rational: {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(symmpair_core::field::q)
            .ok_or_else(|| parse_err(format!("numbers must be integers, got {n}; use \"p/q\" strings"))),
        _ => Err(parse_err(format!("expected a rational, got {v}"))),
    }
}

fn parse_entry(v: &Value) -> Result<Qi> {
    match v {
        Value::Object(o) => {
            let part = |k: &str| o.get(k).map_or(Ok(Q::zero()), parse_scalar);
            Ok(Qi::new(part("re")?, part("im")?))
        }
        _ => Ok(Qi::real(parse_scalar(v)?)),
    }
}

/// Parse the matrix format written by [`matrix`]. A bare array of rows is
/// accepted as well.
pub fn parse_matrix(text: &str) -> Result<(M, FieldTag)> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("matrix JSON: {e}")))?;
    let (rows, field) = match &v {
        Value::Object(o) => {
            let field = match o.get("field").and_then(Value::as_str) {
                None | Some("Q") => FieldTag::Q,
                Some("Qi") => FieldTag::Qi,
                Some(f) => return Err(parse_err(format!("unknown field {f:?}"))),
            };
            (o.get("rows").ok_or_else(|| parse_err("matrix JSON needs \"rows\""))?, field)
        }
        _ => (&v, FieldTag::Q),
    };
    let rows = rows.as_array().ok_or_else(|| parse_err("\"rows\" must be an array"))?;
    let mut out: Vec<Vec<Qi>> = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r.as_array().ok_or_else(|| parse_err("each row must be an array"))?;
        out.push(r.iter().map(parse_entry).collect::<Result<_>>()?);
    }
    let n = out.len();
    if n == 0 || out.iter().any(|r| r.len() != n) {
        return Err(parse_err("matrix must be square and nonempty"));
    }
    if field == FieldTag::Q && !out.iter().flatten().all(Qi::is_real) {
        return Err(parse_err("field Q matrix has non-real entries"));
    }
    Ok((M::from_rows(out), field))
}

/// Real matrix, for the spectral blocks.
pub fn parse_real_matrix(text: &str) -> Result<symmpair_core::Matrix<Q>> {
    let (m, _) = parse_matrix(text)?;
    if !m.entries().iter().all(Qi::is_real) {
        return Err(parse_err("expected a real matrix"));
    }
    Ok(m.map(|z| z.re.clone()))
}

/// Comma separated rationals; the Unicode minus is accepted.
pub fn parse_q_list(text: &str) -> Result<Vec<Q>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_q(s).ok_or_else(|| parse_err(format!("not a rational: {s:?}"))))
        .collect()
}

