use std::io::{self, IsTerminal};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use surreal_kernel::cli::{self, batch, render, Format, Session, SessionConfig};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Exact,
    Truncated,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Signexp,
}

/// Exact calculator for surreal numbers, ordinals and exp/ln.
///
/// With expressions on the command line, evaluates each and prints the
/// results; with --batch, runs a fixture file and prints a JSON report;
/// otherwise starts a REPL on standard input.
#[derive(Debug, Parser)]
#[command(name = "surreal", version)]
struct Args {
    /// Evaluation mode for series-based operations.
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    /// Truncation order K in truncated mode.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
    /// Birthday bound for the Conway-recursion oracle.
    #[arg(long, default_value_t = surreal_kernel::field::DEFAULT_ORACLE_DEPTH)]
    oracle_depth: usize,
    /// Largest accepted epsilon atom index.
    #[arg(long, default_value_t = surreal_kernel::ordinal::DEFAULT_EPS_CEILING)]
    eps_ceiling: u32,
    /// Fixture file (JSON array of {input, expect, tag}) to run.
    #[arg(long, value_name = "FILE")]
    batch: Option<std::path::PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Expressions or `let` statements to evaluate in order.
    exprs: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = SessionConfig {
        truncated: matches!(args.mode, Mode::Truncated),
        order: args.order,
        oracle_depth: args.oracle_depth,
        eps_ceiling: args.eps_ceiling,
    };
    if let Err(e) = config.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let format = match args.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
        OutputFormat::Signexp => Format::SignExp,
    };

    if let Some(path) = args.batch {
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        };
        let fixtures = match batch::parse_fixtures(&text) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        };
        let report = cli::run_fixtures(config, &fixtures);
        match format {
            Format::Text => {
                for r in &report.results {
                    let got = r.got.as_deref().or(r.error.as_deref()).unwrap_or("");
                    let mark = if r.pass { "pass" } else { "FAIL" };
                    println!("{mark} [{}] {} => {got}", r.tag, r.input);
                }
                println!("{}/{} passed", report.passed, report.total);
            }
            _ => println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            ),
        }
        return if report.failed == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        };
    }

    let mut session = Session::new(config);
    if !args.exprs.is_empty() {
        let mut ok = true;
        for e in &args.exprs {
            match session.exec(e).and_then(|v| render(&v, format)) {
                Ok(out) => println!("{out}"),
                Err(err) => {
                    ok = false;
                    eprintln!("error: {err}");
                }
            }
        }
        return if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE };
    }

    let stdin = io::stdin();
    let prompt = stdin.is_terminal();
    match cli::repl::run(&mut session, format, stdin.lock(), io::stdout(), prompt) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
