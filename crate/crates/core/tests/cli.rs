//! The fixture runner and the `surreal` binary.

use std::process::Command;

use surreal_kernel::cli::batch::parse_fixtures;
use surreal_kernel::cli::{run_fixtures, SessionConfig};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/basic.json");

#[test]
fn fixture_file_passes() {
    let text = std::fs::read_to_string(FIXTURES).unwrap();
    let fixtures = parse_fixtures(&text).unwrap();
    let report = run_fixtures(SessionConfig::default(), &fixtures);
    let failed: Vec<_> = report.results.iter().filter(|r| !r.pass).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert_eq!(report.total, fixtures.len());
}

fn surreal(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_surreal"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.success(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn batch_mode_emits_a_json_report() {
    let (ok, out, _) = surreal(&["--batch", FIXTURES, "--format", "json"]);
    assert!(ok);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["failed"], 0);
    assert_eq!(report["passed"], report["total"]);
    assert!(report["results"].as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn expressions_and_flags() {
    let (ok, out, _) = surreal(&["ln(exp(w))", "g(eps_0+3)"]);
    assert!(ok);
    assert_eq!(out, "w\neps_0 + 4\n");

    let (ok, out, _) = surreal(&["--format", "json", "w^2*3 - 1/2"]);
    assert!(ok);
    assert_eq!(out.trim(), r#"{"terms":[{"coef":"3","exp":"2"},{"coef":"-1/2","exp":"0"}]}"#);

    let (ok, _, err) = surreal(&["exp(w^-1)"]);
    assert!(!ok);
    assert!(err.contains("not exactly representable"));

    let (ok, out, _) = surreal(&["--mode", "truncated", "--order", "2", "exp(w^-1)"]);
    assert!(ok);
    assert_eq!(out.trim(), "~1 + w^(-1) + w^(-2)*(1/2)");

    let (ok, _, err) = surreal(&["--eps-ceiling", "2", "eps_3"]);
    assert!(!ok);
    assert!(err.contains("overflow"));

    let (ok, out, _) = surreal(&["--oracle-depth", "3", "cadd(1/2, 1/4)"]);
    assert!(ok);
    assert_eq!(out.trim(), "3/4");
    let (ok, _, err) = surreal(&["--oracle-depth", "2", "cadd(1/8, 1/4)"]);
    assert!(!ok);
    assert!(err.contains("too deep"));

    let (ok, _, _) = surreal(&["--order", "0", "1"]);
    assert!(!ok);
}

#[test]
fn repl_reads_standard_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_surreal"))
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"let x = w^-1\n:mode truncated\n:order 1\nexp(x)\n:mode exact\nx*x\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        ["w^(-1)", "mode truncated, order 4", "order 1", "~1 + w^(-1)", "mode exact", "w^(-2)"]
    );
}
