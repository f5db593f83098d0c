//! Tagged evaluation results and their text, JSON and sign-expansion forms.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value as Json};

use crate::convert::nf_to_signseq;
use crate::error::{Error, Result};
use crate::hierarchy::{Certificate, FieldSpec, GroupSpec, Path, Report};
use crate::json::{from_json, to_json};
use crate::ordinal::Ordinal;
use crate::signseq::{Sign, SignSeq};
use crate::surreal::{ArchRelation, NormalForm};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    /// A number; `approximate` marks truncated-series results and
    /// propagates through arithmetic.
    Num {
        value: NormalForm,
        approximate: bool,
    },
    Ord(Ordinal),
    Seq(SignSeq),
    Bool(bool),
    Text(String),
    Arch(ArchRelation),
    List(Vec<Value>),
    Field(FieldSpec),
    Group(GroupSpec),
    Report(Report),
    Paths(Vec<Path>),
    Cert(Box<Certificate>),
}

impl Value {
    pub fn exact(value: NormalForm) -> Value {
        Value::Num {
            value,
            approximate: false,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Value::Num { .. } => "number",
            Value::Ord(_) => "ordinal",
            Value::Seq(_) => "sign sequence",
            Value::Bool(_) => "boolean",
            Value::Text(_) => "string",
            Value::Arch(_) => "archimedean relation",
            Value::List(_) => "list",
            Value::Field(_) => "field",
            Value::Group(_) => "group",
            Value::Report(_) => "report",
            Value::Paths(_) => "paths",
            Value::Cert(_) => "certificate",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    SignExp,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "signexp" => Ok(Format::SignExp),
            _ => Err(Error::Precondition(format!("unknown format {s:?}"))),
        }
    }
}

pub fn arch_name(r: ArchRelation) -> &'static str {
    match r {
        ArchRelation::MuchLess => "much_less",
        ArchRelation::Comparable => "comparable",
        ArchRelation::MuchGreater => "much_greater",
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::Num {
            value,
            approximate: true,
        } => format!("~{value}"),
        Value::Num { value, .. } => value.to_string(),
        Value::Ord(o) => o.to_string(),
        Value::Seq(s) => s.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Text(s) => s.clone(),
        Value::Arch(r) => arch_name(*r).to_string(),
        Value::List(items) => {
            let parts: Vec<String> = items.iter().map(text).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Field(f) => f.to_string(),
        Value::Group(g) => g.to_string(),
        Value::Report(r) => r.to_string().trim_end().to_string(),
        Value::Paths(ps) => ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n"),
        Value::Cert(c) => serde_json::to_string(c).expect("certificates serialize"),
    }
}

fn to_json_value(v: &Value) -> Json {
    match v {
        Value::Num { value, approximate } => {
            let mut j = to_json(value);
            if *approximate {
                j["approximate"] = Json::Bool(true);
            }
            j
        }
        Value::Ord(o) => Json::String(o.to_string()),
        Value::Seq(s) => Json::String(s.to_string()),
        Value::Bool(b) => Json::Bool(*b),
        Value::Text(s) => Json::String(s.clone()),
        Value::Arch(r) => Json::String(arch_name(*r).into()),
        Value::List(items) => Json::Array(items.iter().map(to_json_value).collect()),
        Value::Field(f) => ser(f),
        Value::Group(g) => ser(g),
        Value::Report(r) => ser(r),
        Value::Paths(ps) => json!(ps),
        Value::Cert(c) => ser(c.as_ref()),
    }
}

fn ser<T: serde::Serialize>(x: &T) -> Json {
    serde_json::to_value(x).expect("values serialize")
}

fn signexp(v: &Value) -> Result<String> {
    match v {
        Value::Num { approximate: true, .. } => Err(Error::ApproximateInput("signexp".into())),
        Value::Num { value, .. } => Ok(nf_to_signseq(value)?.to_string()),
        Value::Ord(o) => Ok(SignSeq::run(Sign::Plus, o.clone()).to_string()),
        Value::List(items) => {
            let parts = items.iter().map(signexp).collect::<Result<Vec<_>>>()?;
            Ok(format!("[{}]", parts.join(", ")))
        }
        other => Ok(text(other)),
    }
}

/// Canonical rendering; text and JSON number forms parse back with
/// [`parse_number`].
pub fn render(v: &Value, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(text(v)),
        Format::Json => Ok(to_json_value(v).to_string()),
        Format::SignExp => signexp(v),
    }
}

/// Parses a rendered number (text with optional `~` marker, normal form
/// JSON, or run-syntax sign expansion).
pub fn parse_number(s: &str, format: Format) -> Result<Value> {
    let s = s.trim();
    match format {
        Format::Text => {
            let (approximate, body) = match s.strip_prefix('~') {
                Some(rest) => (true, rest),
                None => (false, s),
            };
            Ok(Value::Num {
                value: super::parse_value(body)?,
                approximate,
            })
        }
        Format::Json => {
            let j: Json = serde_json::from_str(s)
                .map_err(|e| Error::Eval(format!("malformed JSON: {e}")))?;
            Ok(Value::Num {
                value: from_json(&j)?,
                approximate: j.get("approximate").and_then(Json::as_bool).unwrap_or(false),
            })
        }
        Format::SignExp => {
            let seq: SignSeq = s.parse()?;
            Ok(Value::exact(crate::convert::signseq_to_nf(&seq)?))
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(s: &str) -> Value {
        Value::exact(s.parse().unwrap())
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&num("w^(-1)"), Format::SignExp).unwrap(), "+^1 -^w");
        assert_eq!(render(&num("3/4"), Format::Text).unwrap(), "3/4");
        let approx = Value::Num {
            value: "1 + w^(-1)".parse().unwrap(),
            approximate: true,
        };
        assert_eq!(render(&approx, Format::Text).unwrap(), "~1 + w^(-1)");
        assert!(render(&num("1/3"), Format::SignExp).is_err());
    }

    #[test]
    fn rendered_numbers_parse_back() {
        let approx = Value::Num {
            value: "1 + w^(-1)".parse().unwrap(),
            approximate: true,
        };
        for v in [num("w^w + 3*w - 1/2"), num("eps_0*2 + w^(1/2)"), num("0"), approx] {
            for f in [Format::Text, Format::Json] {
                let r = render(&v, f).unwrap();
                let back = parse_number(&r, f).unwrap();
                assert_eq!(back, v, "{r}");
                assert_eq!(render(&back, f).unwrap(), r);
            }
        }
        let v = num("-13/8");
        let r = render(&v, Format::SignExp).unwrap();
        assert_eq!(parse_number(&r, Format::SignExp).unwrap(), v);
    }
}
