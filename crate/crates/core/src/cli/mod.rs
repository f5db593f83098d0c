//! Expression language, evaluator, rendering and the REPL/batch drivers.

pub mod batch;
pub mod eval;
pub mod parser;
pub mod repl;
pub mod value;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ordinal::DEFAULT_EPS_CEILING;
use crate::rational::Rational;
use crate::surreal::NormalForm;
use parser::{BinOp, Expr};

pub use batch::{run_fixtures, BatchReport, Fixture, FixtureResult};
pub use eval::{Session, SessionConfig};
pub use value::{render, Format, Value};

/// `base ^ exp` on normal forms: monomial powers `(w^a)^e = w^(a e)` and
/// natural (or, for monomials, integer) powers.
pub fn power(base: &NormalForm, exp: &NormalForm) -> Result<NormalForm> {
    let n = exp.as_integer();
    if let Some(n) = n.filter(|n| *n >= 0) {
        let n = u32::try_from(n).map_err(|_| Error::Eval(format!("exponent {n} too large")))?;
        return Ok(base.powi(n));
    }
    match base.as_term() {
        Some(t) if t.coef.is_one() => Ok(NormalForm::omega_pow(&t.exp.value() * exp)),
        Some(_) if n.is_some() => {
            let n = n.expect("checked");
            let k = u32::try_from(-n).map_err(|_| Error::Eval(format!("exponent {n} too large")))?;
            Ok(base.monomial_inverse()?.powi(k))
        }
        _ => Err(Error::Eval(format!(
            "({base})^({exp}) needs a monomial base w^a or an integer exponent"
        ))),
    }
}

/// Identifiers that denote constants: `w` and `eps_k`.
pub fn constant(name: &str, eps_ceiling: u32) -> Option<Result<NormalForm>> {
    if name == "w" {
        return Some(Ok(NormalForm::omega()));
    }
    let k = name.strip_prefix("eps_")?;
    if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(match k.parse::<u32>() {
        Ok(k) if k <= eps_ceiling => Ok(NormalForm::eps(k)),
        _ => Err(Error::NotationOverflow(format!(
            "{name} exceeds the configured ceiling eps_{eps_ceiling}"
        ))),
    })
}

pub fn arith(op: &BinOp, a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
    Ok(match op {
        BinOp::Add => a + b,
        BinOp::Sub => a - b,
        BinOp::Mul => a * b,
        BinOp::Div => crate::field::div_exact(a, b)?,
    })
}

fn literal(e: &Expr) -> Result<NormalForm> {
    match e {
        Expr::Int(n) => Ok(NormalForm::constant(Rational::from_integer(n.clone()))),
        Expr::Var(v) => constant(v, DEFAULT_EPS_CEILING)
            .unwrap_or_else(|| Err(Error::Eval(format!("unknown name {v}")))),
        Expr::Neg(x) => Ok(-literal(x)?),
        Expr::Bin(op, a, b) => arith(op, &literal(a)?, &literal(b)?),
        Expr::Pow(a, b) => power(&literal(a)?, &literal(b)?),
        _ => Err(Error::Eval("expected a number".into())),
    }
}

/// Parses a number written in the text syntax (no function calls).
pub fn parse_value(s: &str) -> Result<NormalForm> {
    literal(&parser::parse(s)?)
}
