//! Input documents.
//!
//! ```json
//! {"alpha": [1, -6, "2/3", 0, 0, 0], "potential": [[2, 0, "1"], [0, 2, 1]], "tol": 1e-9}
//! {"pair": [[2, 1, "2/3", 1, 2, -3], {"alpha": [1, -3, "8/3", 2, 4, -3]}]}
//! ```
//!
//! Parameters given only as integers or rational strings use the exact
//! backend; any non-integer JSON number selects the floating-point backend.

use ktweb_core::{parse_rational, scalar, KTParams, Poly2, Rational};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct Document {
    pub alpha: Option<KTParams>,
    pub pair: Option<(KTParams, KTParams)>,
    pub potential: Option<Poly2>,
    pub tol: Option<f64>,
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

enum Scalar {
    Exact(Rational),
    Float(f64),
}

fn scalar_value(v: &Value) -> Result<Scalar, CliError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::Exact(Rational::from_integer(i.into())))
            } else if let Some(u) = n.as_u64() {
                Ok(Scalar::Exact(Rational::from_integer(u.into())))
            } else {
                Ok(Scalar::Float(n.as_f64().ok_or_else(|| malformed("number out of range"))?))
            }
        }
        Value::String(s) => parse_rational(s)
            .map(Scalar::Exact)
            .map_err(|_| malformed(format!("not a rational number: {s:?}"))),
        other => Err(malformed(format!("expected a number, found {other}"))),
    }
}

fn exact_value(v: &Value) -> Result<Rational, CliError> {
    match scalar_value(v)? {
        Scalar::Exact(q) => Ok(q),
        Scalar::Float(x) => scalar::from_f64(x).ok_or_else(|| malformed("non-finite coefficient")),
    }
}

pub fn parse_alpha(v: &Value) -> Result<KTParams, CliError> {
    let v = match v {
        Value::Object(map) => map.get("alpha").ok_or_else(|| malformed("missing \"alpha\""))?,
        other => other,
    };
    let items = v.as_array().ok_or_else(|| malformed("\"alpha\" must be an array"))?;
    if items.len() != 6 {
        return Err(malformed(format!("\"alpha\" needs 6 entries, found {}", items.len())));
    }
    let scalars = items.iter().map(scalar_value).collect::<Result<Vec<_>, _>>()?;
    if scalars.iter().all(|s| matches!(s, Scalar::Exact(_))) {
        let exact: [Rational; 6] = std::array::from_fn(|i| match &scalars[i] {
            Scalar::Exact(q) => q.clone(),
            Scalar::Float(_) => unreachable!(),
        });
        return KTParams::from_rationals(exact).map_err(|e| malformed(e.to_string()));
    }
    let values: [f64; 6] = std::array::from_fn(|i| match &scalars[i] {
        Scalar::Exact(q) => scalar::to_f64(q),
        Scalar::Float(x) => *x,
    });
    KTParams::new(values).map_err(|e| malformed(e.to_string()))
}

pub fn parse_potential(v: &Value) -> Result<Poly2, CliError> {
    let items = v.as_array().ok_or_else(|| malformed("\"potential\" must be an array"))?;
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let t = item
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| malformed("potential terms are [i, j, coefficient]"))?;
        let exponent = |v: &Value| {
            v.as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| malformed("exponents must be non-negative integers"))
        };
        terms.push((exponent(&t[0])?, exponent(&t[1])?, exact_value(&t[2])?));
    }
    Ok(Poly2::from_terms(terms)?)
}

pub fn parse_document(v: &Value) -> Result<Document, CliError> {
    let map = v.as_object().ok_or_else(|| malformed("input document must be a JSON object"))?;
    let alpha = map.get("alpha").map(parse_alpha).transpose()?;
    let pair = match map.get("pair") {
        Some(Value::Array(items)) if items.len() == 2 => Some((parse_alpha(&items[0])?, parse_alpha(&items[1])?)),
        Some(_) => return Err(malformed("\"pair\" must hold exactly two parameter sets")),
        None => None,
    };
    let potential = map.get("potential").map(parse_potential).transpose()?;
    let tol = match map.get("tol") {
        Some(t) => {
            let t = t.as_f64().filter(|t| t.is_finite() && *t >= 0.0);
            Some(t.ok_or_else(|| malformed("\"tol\" must be a non-negative number"))?)
        }
        None => None,
    };
    Ok(Document {
        alpha,
        pair,
        potential,
        tol,
    })
}

/// Splits a stream of concatenated or newline-separated JSON documents.
pub fn read_documents(text: &str) -> Vec<Result<Value, String>> {
    let mut out = Vec::new();
    let mut stream = serde_json::Deserializer::from_str(text).into_iter::<Value>();
    loop {
        match stream.next() {
            Some(Ok(v)) => out.push(Ok(v)),
            Some(Err(e)) => {
                out.push(Err(format!("invalid JSON: {e}")));
                break;
            }
            None => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn backend_selection() {
        let p = parse_alpha(&json!([1, -6, "2/3", 0, 0, 0])).unwrap();
        assert!(p.is_exact());
        let p = parse_alpha(&json!([1, -6, 0.5, 0, 0, 0])).unwrap();
        assert!(!p.is_exact());
        assert_eq!(p.alpha(3), 0.5);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(parse_alpha(&json!([1, 2, 3])).is_err());
        assert!(parse_alpha(&json!([1, 2, 3, 4, 5, "x"])).is_err());
        assert!(parse_potential(&json!([[1, 0]])).is_err());
        assert!(parse_potential(&json!([[-1, 0, 1]])).is_err());
        assert!(parse_document(&json!([1])).is_err());
    }

    #[test]
    fn potential_terms() {
        let v = parse_potential(&json!([[2, 0, "1/2"], [0, 2, 3], [0, 2, "-3"]])).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn document_stream() {
        let docs = read_documents("{\"alpha\":[1,1,0,0,0,0]}\n{\"alpha\":[1,2,0,0,0,0]} {\"oops\"");
        assert_eq!(docs.len(), 3);
        assert!(docs[0].is_ok() && docs[1].is_ok() && docs[2].is_err());
    }
}
