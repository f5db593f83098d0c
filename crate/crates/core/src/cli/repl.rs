//! Line-oriented REPL: expressions, `let name = expr`, and `:` commands.

use std::io::{BufRead, Write};

use super::eval::{Session, FUNCTIONS};
use super::value::{render, Format};

const HELP: &str = "commands: :mode exact|truncated, :order K, :depth N, :ceiling K, \
:format text|json|signexp, :show, :help, :quit";

/// Applies a `:` command; returns the reply and whether to quit.
pub fn command(session: &mut Session, format: &mut Format, line: &str) -> (String, bool) {
    let mut words = line.trim_start_matches(':').split_whitespace();
    let cmd = words.next().unwrap_or("");
    let arg = words.next();
    let cfg = &mut session.config;
    let reply = match (cmd, arg) {
        ("mode", Some("exact")) => {
            cfg.truncated = false;
            "mode exact".to_string()
        }
        ("mode", Some("truncated")) => {
            cfg.truncated = true;
            format!("mode truncated, order {}", cfg.order)
        }
        ("order", Some(k)) => match k.parse::<u32>() {
            Ok(k) if k >= 1 => {
                cfg.order = k;
                format!("order {k}")
            }
            _ => format!("error: order must be a positive integer, got {k:?}"),
        },
        ("depth", Some(n)) => match n.parse::<usize>() {
            Ok(n) if n >= 1 => {
                cfg.oracle_depth = n;
                format!("oracle depth {n}")
            }
            _ => format!("error: depth must be a positive integer, got {n:?}"),
        },
        ("ceiling", Some(k)) => match k.parse::<u32>() {
            Ok(k) => {
                cfg.eps_ceiling = k;
                format!("eps ceiling {k}")
            }
            _ => format!("error: ceiling must be a natural number, got {k:?}"),
        },
        ("format", Some(f)) => match f.parse::<Format>() {
            Ok(f) => {
                *format = f;
                format!("format {f:?}").to_lowercase()
            }
            Err(e) => format!("error: {e}"),
        },
        ("show", None) => format!(
            "mode {}, order {}, depth {}, ceiling {}",
            if cfg.truncated { "truncated" } else { "exact" },
            cfg.order,
            cfg.oracle_depth,
            cfg.eps_ceiling
        ),
        ("help", None) => {
            let mut s = HELP.to_string();
            for (sig, what) in FUNCTIONS {
                s.push_str(&format!("\n  {sig}: {what}"));
            }
            s
        }
        ("quit" | "q", None) => return (String::new(), true),
        _ => format!("error: unknown command {line:?}; {HELP}"),
    };
    (reply, false)
}

/// Evaluates one REPL line and returns the text to print.
pub fn respond(session: &mut Session, format: &mut Format, line: &str) -> (String, bool) {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return (String::new(), false);
    }
    if line.starts_with(':') {
        return command(session, format, line);
    }
    let out = session
        .exec(line)
        .and_then(|v| render(&v, *format))
        .unwrap_or_else(|e| format!("error: {e}"));
    (out, false)
}

/// Runs the REPL until end of input or `:quit`. The prompt is written only
/// when `prompt` is set.
pub fn run(
    session: &mut Session,
    mut format: Format,
    input: impl BufRead,
    mut output: impl Write,
    prompt: bool,
) -> std::io::Result<()> {
    if prompt {
        write!(output, "> ")?;
        output.flush()?;
    }
    for line in input.lines() {
        let (reply, quit) = respond(session, &mut format, &line?);
        if quit {
            break;
        }
        if !reply.is_empty() {
            writeln!(output, "{reply}")?;
        }
        if prompt {
            write!(output, "> ")?;
            output.flush()?;
        }
    }
    Ok(())
}
