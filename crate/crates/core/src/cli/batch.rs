//! Fixture files: a JSON array of `{input, expect, tag}`.
//!
//! `input` is one statement, or several separated by `;` (earlier ones may
//! be `let` bindings). `expect` is matched against the value of the last
//! statement:
//! * `error` or `error:Kind` expects a failure (of that error kind);
//! * `pass` / `fail` match the outcome of a report;
//! * anything else must equal the text rendering, or denote the same
//!   number when both sides are numbers.

use serde::{Deserialize, Serialize};

use super::eval::{Session, SessionConfig};
use super::value::{parse_number, render, Format, Value};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub input: String,
    pub expect: String,
    #[serde(default)]
    pub tag: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FixtureResult {
    pub tag: String,
    pub input: String,
    pub expect: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub got: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BatchReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<FixtureResult>,
}

pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    serde_json::from_str(text).map_err(|e| Error::Eval(format!("malformed fixture file: {e}")))
}

fn run_input(config: SessionConfig, input: &str) -> Result<Value> {
    let mut session = Session::new(config);
    let mut last = None;
    for stmt in input.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        last = Some(session.exec(stmt)?);
    }
    last.ok_or_else(|| Error::Eval("empty input".into()))
}

fn matches(value: &Value, rendered: &str, expect: &str) -> bool {
    let expect = expect.trim();
    if rendered == expect {
        return true;
    }
    match value {
        Value::Report(r) => expect == if r.pass { "pass" } else { "fail" },
        Value::Num { .. } | Value::Ord(_) => {
            let as_num = |v: &Value| match v {
                Value::Ord(o) => Some((crate::surreal::NormalForm::from_ordinal(o), false)),
                Value::Num { value, approximate } => Some((value.clone(), *approximate)),
                _ => None,
            };
            match parse_number(expect, Format::Text) {
                Ok(e) => as_num(&e) == as_num(value),
                Err(_) => false,
            }
        }
        _ => false,
    }
}

pub fn run_fixture(config: SessionConfig, f: &Fixture) -> FixtureResult {
    let outcome = run_input(config, &f.input);
    let expect = f.expect.trim();
    let (got, error, pass) = match outcome {
        Ok(v) => {
            let text = render(&v, Format::Text).unwrap_or_else(|e| format!("<{e}>"));
            let pass = matches(&v, &text, expect);
            (Some(text), None, pass)
        }
        Err(e) => {
            let pass = match expect.strip_prefix("error") {
                Some("") => true,
                Some(kind) => kind.trim_start_matches(':').trim() == e.kind(),
                None => false,
            };
            (None, Some(format!("{}: {e}", e.kind())), pass)
        }
    };
    FixtureResult {
        tag: f.tag.clone(),
        input: f.input.clone(),
        expect: f.expect.clone(),
        got,
        error,
        pass,
    }
}

/// Runs every fixture in a fresh session with the given configuration.
pub fn run_fixtures(config: SessionConfig, fixtures: &[Fixture]) -> BatchReport {
    let results: Vec<FixtureResult> = fixtures.iter().map(|f| run_fixture(config, f)).collect();
    let passed = results.iter().filter(|r| r.pass).count();
    BatchReport {
        total: results.len(),
        passed,
        failed: results.len() - passed,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_matching() {
        let text = r#"[
            {"input": "ln(exp(w))", "expect": "w", "tag": "roundtrip"},
            {"input": "g(eps_0 + 3)", "expect": "4 + eps_0", "tag": "g"},
            {"input": "let x = w; x + 1", "expect": "w + 1", "tag": "let"},
            {"input": "ln(0)", "expect": "error:NonpositiveArgument", "tag": "err"},
            {"input": "instability(w, eps_0)", "expect": "pass", "tag": "witness"},
            {"input": "length(w + 1)", "expect": "w + 1", "tag": "len"},
            {"input": "1 + 1", "expect": "3", "tag": "wrong"}
        ]"#;
        let report = run_fixtures(SessionConfig::default(), &parse_fixtures(text).unwrap());
        assert_eq!(report.total, 7);
        assert_eq!(report.passed, 6, "{report:#?}");
        assert!(!report.results[6].pass);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"failed\":1"));
    }
}
