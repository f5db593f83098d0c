//! JSON form of normal forms:
//! `{"terms":[{"exp": <NormalForm | "int" | "eps_k">, "coef": "p/q"}]}`.
//!
//! Integer exponents and epsilon atoms are written as strings, every other
//! exponent as a nested object. Coefficients are `"p"` for integers and
//! `"p/q"` otherwise.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::rational;
use crate::surreal::{Exp, NormalForm};

fn exp_to_json(e: &Exp) -> Value {
    match e {
        Exp::Eps(k) => Value::String(format!("eps_{k}")),
        Exp::Num(x) => match x.as_integer() {
            Some(n) => Value::String(n.to_string()),
            None => to_json(x),
        },
    }
}

pub fn to_json(x: &NormalForm) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|t| json!({"exp": exp_to_json(&t.exp), "coef": rational::render(&t.coef)}))
        .collect();
    json!({ "terms": terms })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Eval(format!("malformed normal form JSON: {}", msg.into()))
}

fn exp_from_json(v: &Value) -> Result<NormalForm> {
    match v {
        Value::String(s) => {
            if let Some(k) = s.strip_prefix("eps_") {
                let k: u32 = k.parse().map_err(|_| bad(format!("exponent {s:?}")))?;
                return Ok(NormalForm::eps(k));
            }
            let n: i64 = s.parse().map_err(|_| bad(format!("exponent {s:?}")))?;
            Ok(NormalForm::int(n))
        }
        Value::Object(_) => from_json(v),
        other => Err(bad(format!("exponent {other}"))),
    }
}

pub fn from_json(v: &Value) -> Result<NormalForm> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        let e = exp_from_json(t.get("exp").ok_or_else(|| bad("term without \"exp\""))?)?;
        let c = t
            .get("coef")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("term without string \"coef\""))?;
        pairs.push((e, rational::parse(c)?));
    }
    Ok(NormalForm::from_terms(pairs))
}

pub fn parse_json(text: &str) -> Result<NormalForm> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    from_json(&v)
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod rational_text {
    use super::*;
    use crate::rational::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational::render(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational::parse(&s).map_err(D::Error::custom)
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for NormalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        from_json(&v).map_err(D::Error::custom)
    }
}
