//! Session state and the evaluator dispatching to the kernel modules.

use std::collections::BTreeMap;

use super::parser::{self, BinOp, Expr, Stmt};
use super::value::Value;
use super::{arith, constant, power};
use crate::convert::{length_of, nf_to_signseq, signseq_to_nf};
use crate::error::{Error, Result};
use crate::explog::{self, EvalMode};
use crate::field::{self, TruncationPolicy, DEFAULT_ORACLE_DEPTH};
use crate::gonshor;
use crate::hierarchy::{self, Certificate, FieldSpec, GroupSpec};
use crate::ordinal::{Ordinal, DEFAULT_EPS_CEILING};
use crate::signseq::{simplest_between, SignSeq};
use crate::surreal::NormalForm;

/// Evaluation settings shared by every expression of a session.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SessionConfig {
    /// Series are evaluated (and flagged approximate) only when set.
    pub truncated: bool,
    /// Truncation order `K`.
    pub order: u32,
    /// Birthday bound for the Conway-recursion oracle.
    pub oracle_depth: usize,
    /// Largest epsilon atom index accepted in input.
    pub eps_ceiling: u32,
}

impl Default for SessionConfig {
    fn default() -> SessionConfig {
        SessionConfig {
            truncated: false,
            order: 4,
            oracle_depth: DEFAULT_ORACLE_DEPTH,
            eps_ceiling: DEFAULT_EPS_CEILING,
        }
    }
}

impl SessionConfig {
    pub fn mode(&self) -> EvalMode {
        if self.truncated {
            EvalMode::Truncated(self.order)
        } else {
            EvalMode::Exact
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 || self.oracle_depth == 0 {
            return Err(Error::Precondition("session bounds must be positive".into()));
        }
        Ok(())
    }
}

/// A configuration plus `let` bindings.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub config: SessionConfig,
    bindings: BTreeMap<String, Value>,
}

fn type_error(func: &str, want: &str, got: &Value) -> Error {
    Error::Eval(format!("{func}: expected {want}, got {} {got}", got.kind()))
}

fn num(func: &str, v: &Value) -> Result<(NormalForm, bool)> {
    match v {
        Value::Num { value, approximate } => Ok((value.clone(), *approximate)),
        Value::Ord(o) => Ok((NormalForm::from_ordinal(o), false)),
        Value::Seq(s) => Ok((signseq_to_nf(s)?, false)),
        other => Err(type_error(func, "a number", other)),
    }
}

/// A number argument that must not carry the approximation flag.
fn exact_num(func: &str, v: &Value) -> Result<NormalForm> {
    match num(func, v)? {
        (_, true) => Err(Error::ApproximateInput(func.into())),
        (x, false) => Ok(x),
    }
}

fn ord(func: &str, v: &Value) -> Result<Ordinal> {
    match v {
        Value::Ord(o) => Ok(o.clone()),
        Value::Num {
            value,
            approximate: false,
        } => value.to_ordinal().ok_or_else(|| type_error(func, "an ordinal", v)),
        other => Err(type_error(func, "an ordinal", other)),
    }
}

fn natural(func: &str, v: &Value) -> Result<u64> {
    ord(func, v)?
        .as_u64()
        .ok_or_else(|| type_error(func, "a natural number", v))
}

fn seq(func: &str, v: &Value) -> Result<SignSeq> {
    match v {
        Value::Seq(s) => Ok(s.clone()),
        Value::Text(t) => t.parse(),
        Value::Ord(o) => Ok(SignSeq::run(crate::signseq::Sign::Plus, o.clone())),
        other => nf_to_signseq(&exact_num(func, other)?),
    }
}

fn group(func: &str, v: &Value) -> Result<GroupSpec> {
    match v {
        Value::Group(g) => Ok(g.clone()),
        Value::Field(FieldSpec::NoLt { lambda }) => Ok(GroupSpec::NoLt { mu: lambda.clone() }),
        other => Err(type_error(func, "a group", other)),
    }
}

fn field_spec(func: &str, v: &Value) -> Result<FieldSpec> {
    match v {
        Value::Field(f) => Ok(f.clone()),
        Value::Group(GroupSpec::NoLt { mu }) => Ok(FieldSpec::NoLt { lambda: mu.clone() }),
        other => Err(type_error(func, "a field", other)),
    }
}

fn list(func: &str, v: &Value) -> Result<Vec<Value>> {
    match v {
        Value::List(items) => Ok(items.clone()),
        other => Err(type_error(func, "a list", other)),
    }
}

fn arity(func: &str, args: &[Value], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::Eval(format!(
            "{func} takes {n} argument(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

fn approx(value: NormalForm, approximate: bool) -> Value {
    Value::Num { value, approximate }
}

/// Names accepted by [`Session::eval`] as function calls.
pub const FUNCTIONS: &[(&str, &str)] = &[
    ("exp(x)", "exponential; truncated mode needed for real/infinitesimal parts"),
    ("ln(x)", "logarithm of a positive number"),
    ("lnn(x, n)", "n-fold exact logarithm"),
    ("g(x), h(x)", "Gonshor's maps"),
    ("inv(x)", "inverse (exact for monomials, else truncated)"),
    ("simplest([A], [B])", "simplest number strictly between A and B"),
    ("length(x)", "length of the sign expansion"),
    ("signexp(x)", "sign expansion"),
    ("nf(s)", "normal form of a sign sequence (string or sequence)"),
    ("arch(x, y)", "Archimedean relation"),
    ("cadd(x, y), cmul(x, y)", "Conway-recursion sum and product"),
    ("Nolt(mu)", "the group/field No_<mu"),
    ("SRF(lambda, G)", "series field over G with support below lambda"),
    ("up(G, lambda, level)", "level of the generated group G^up_lambda"),
    ("member(x, F)", "membership"),
    ("why(x, F)", "membership report"),
    ("certify(x, G)", "certificate for x in a generated group"),
    ("check(x, G, c)", "check a certificate"),
    ("paths(x, depth)", "paths of x"),
    ("logatomic(x, k)", "ln_i x monomial for i <= k"),
    ("strictness(mu, mu2, lambda, depth)", "strictness witness report"),
    ("instability(alpha, lambda)", "instability witness report"),
    ("ordadd, ordmul, ordpow, natadd, natmul", "ordinal arithmetic"),
    ("classify(o), canon(lambda, n), monoid(o)", "ordinal utilities"),
];

impl Session {
    pub fn new(config: SessionConfig) -> Session {
        Session {
            config,
            bindings: BTreeMap::new(),
        }
    }

    pub fn bindings(&self) -> &BTreeMap<String, Value> {
        &self.bindings
    }

    /// Evaluates an expression or `let` binding; a binding returns the
    /// bound value.
    pub fn exec(&mut self, line: &str) -> Result<Value> {
        match parser::parse_stmt(line)? {
            Stmt::Let(name, e) => {
                if constant(&name, u32::MAX).is_some() {
                    return Err(Error::Eval(format!("{name} is a constant")));
                }
                let v = self.eval(&e)?;
                self.bindings.insert(name, v.clone());
                Ok(v)
            }
            Stmt::Expr(e) => self.eval(&e),
        }
    }

    pub fn eval_str(&self, text: &str) -> Result<Value> {
        self.eval(&parser::parse(text)?)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Int(n) => Ok(Value::exact(NormalForm::constant(n.clone().into()))),
            Expr::Str(s) => Ok(Value::Text(s.clone())),
            Expr::Var(name) => {
                if let Some(v) = self.bindings.get(name) {
                    return Ok(v.clone());
                }
                match name.as_str() {
                    "true" => return Ok(Value::Bool(true)),
                    "false" => return Ok(Value::Bool(false)),
                    _ => {}
                }
                match constant(name, self.config.eps_ceiling) {
                    Some(v) => Ok(Value::exact(v?)),
                    None => Err(Error::Eval(format!("unknown name {name}"))),
                }
            }
            Expr::Neg(x) => {
                let (v, a) = num("-", &self.eval(x)?)?;
                Ok(approx(-v, a))
            }
            Expr::Bin(op, x, y) => {
                let (a, fa) = num("arithmetic", &self.eval(x)?)?;
                let (b, fb) = num("arithmetic", &self.eval(y)?)?;
                self.binary(op, &a, &b, fa || fb)
            }
            Expr::Pow(x, y) => {
                let (a, fa) = num("^", &self.eval(x)?)?;
                let (b, fb) = num("^", &self.eval(y)?)?;
                Ok(approx(power(&a, &b)?, fa || fb))
            }
            Expr::List(items) => Ok(Value::List(
                items.iter().map(|i| self.eval(i)).collect::<Result<_>>()?,
            )),
            Expr::Call { name, args } => {
                let args = args
                    .iter()
                    .map(|a| self.eval(a))
                    .collect::<Result<Vec<_>>>()?;
                self.call(name, &args).map_err(|e| match e {
                    e @ (Error::Eval(_) | Error::In { .. }) => e,
                    e => e.within(name),
                })
            }
        }
    }

    fn binary(&self, op: &BinOp, a: &NormalForm, b: &NormalForm, flag: bool) -> Result<Value> {
        match arith(op, a, b) {
            Ok(v) => Ok(approx(v, flag)),
            Err(Error::NotExactlyRepresentable(_)) if self.config.truncated => {
                let inv = field::inv_truncated(b, TruncationPolicy::new(self.config.order)?)?;
                Ok(approx(a * &inv.value, flag || inv.approximate))
            }
            Err(e) => Err(e.within("/")),
        }
    }

    fn call(&self, name: &str, args: &[Value]) -> Result<Value> {
        let mode = self.config.mode();
        match name {
            "exp" | "ln" => {
                arity(name, args, 1)?;
                let (x, flag) = num(name, &args[0])?;
                let r = if name == "exp" {
                    explog::exp(&x, mode)?
                } else {
                    explog::ln(&x, mode)?
                };
                Ok(approx(r.value, r.approximate || flag))
            }
            "lnn" => {
                arity(name, args, 2)?;
                let x = exact_num(name, &args[0])?;
                let n = natural(name, &args[1])?;
                let n = u32::try_from(n).map_err(|_| Error::Eval("lnn: n too large".into()))?;
                Ok(Value::exact(explog::ln_iter(&x, n)?))
            }
            "g" | "h" => {
                arity(name, args, 1)?;
                let x = exact_num(name, &args[0])?;
                let r = if name == "g" { gonshor::g(&x)? } else { gonshor::h(&x)? };
                Ok(Value::exact(r))
            }
            "inv" => {
                arity(name, args, 1)?;
                let (x, flag) = num(name, &args[0])?;
                if x.as_term().is_some() || !self.config.truncated {
                    return self.binary(&BinOp::Div, &NormalForm::one(), &x, flag);
                }
                let r = field::inv_truncated(&x, TruncationPolicy::new(self.config.order)?)?;
                Ok(approx(r.value, r.approximate || flag))
            }
            "simplest" => {
                arity(name, args, 2)?;
                let side = |v: &Value| -> Result<Vec<SignSeq>> {
                    list(name, v)?.iter().map(|x| seq(name, x)).collect()
                };
                let s = simplest_between(&side(&args[0])?, &side(&args[1])?)?;
                Ok(Value::exact(signseq_to_nf(&s)?))
            }
            "length" => {
                arity(name, args, 1)?;
                match &args[0] {
                    Value::Seq(s) => Ok(Value::Ord(s.length()?)),
                    other => Ok(Value::Ord(length_of(&exact_num(name, other)?)?)),
                }
            }
            "signexp" => {
                arity(name, args, 1)?;
                Ok(Value::Seq(nf_to_signseq(&exact_num(name, &args[0])?)?))
            }
            "nf" => {
                arity(name, args, 1)?;
                Ok(Value::exact(signseq_to_nf(&seq(name, &args[0])?)?))
            }
            "arch" => {
                arity(name, args, 2)?;
                let (x, _) = num(name, &args[0])?;
                let (y, _) = num(name, &args[1])?;
                Ok(Value::Arch(x.arch_rel(&y)?))
            }
            "cadd" | "cmul" => {
                arity(name, args, 2)?;
                let x = seq(name, &args[0])?;
                let y = seq(name, &args[1])?;
                let bound = self.config.oracle_depth;
                let z = if name == "cadd" {
                    field::conway_add(&x, &y, bound)?
                } else {
                    field::conway_mul(&x, &y, bound)?
                };
                Ok(Value::exact(signseq_to_nf(&z)?))
            }
            "Nolt" => {
                arity(name, args, 1)?;
                Ok(Value::Group(GroupSpec::NoLt { mu: ord(name, &args[0])? }))
            }
            "SRF" => {
                arity(name, args, 2)?;
                Ok(Value::Field(FieldSpec::Srf {
                    lambda: ord(name, &args[0])?,
                    group: group(name, &args[1])?,
                }))
            }
            "up" => {
                arity(name, args, 3)?;
                let level = natural(name, &args[2])?;
                Ok(Value::Group(GroupSpec::GammaUp {
                    base: Box::new(group(name, &args[0])?),
                    lambda: ord(name, &args[1])?,
                    level: u32::try_from(level).map_err(|_| Error::Eval("up: level too large".into()))?,
                }))
            }
            "member" | "why" => {
                arity(name, args, 2)?;
                let x = exact_num(name, &args[0])?;
                let f = match &args[1] {
                    Value::Group(g @ GroupSpec::GammaUp { .. }) => {
                        return Ok(Value::Bool(hierarchy::in_group(&x, g)?));
                    }
                    other => field_spec(name, other)?,
                };
                let r = hierarchy::membership_report(&x, &f)?;
                Ok(if name == "member" {
                    Value::Bool(r.pass)
                } else {
                    Value::Report(r)
                })
            }
            "certify" => {
                arity(name, args, 2)?;
                let x = exact_num(name, &args[0])?;
                match hierarchy::certify(&x, &group(name, &args[1])?)? {
                    Some(c) => Ok(Value::Cert(Box::new(c))),
                    None => Err(Error::Eval(format!("certify: no certificate found for {x}"))),
                }
            }
            "check" => {
                arity(name, args, 3)?;
                let x = exact_num(name, &args[0])?;
                let g = group(name, &args[1])?;
                let c: Certificate = match &args[2] {
                    Value::Cert(c) => (**c).clone(),
                    Value::Text(t) => Certificate::from_json(t)?,
                    other => return Err(type_error(name, "a certificate", other)),
                };
                Ok(Value::Bool(hierarchy::check_certificate(&x, &g, &c)?))
            }
            "paths" => {
                arity(name, args, 2)?;
                let x = exact_num(name, &args[0])?;
                let d = natural(name, &args[1])? as usize;
                Ok(Value::Paths(hierarchy::enumerate_paths(&x, d)))
            }
            "logatomic" => {
                arity(name, args, 2)?;
                let x = exact_num(name, &args[0])?;
                let k = natural(name, &args[1])? as usize;
                Ok(Value::Bool(hierarchy::log_atomic_depth(&x, k)?))
            }
            "strictness" => {
                arity(name, args, 4)?;
                Ok(Value::Report(hierarchy::strictness_witness_check(
                    &ord(name, &args[0])?,
                    &ord(name, &args[1])?,
                    &ord(name, &args[2])?,
                    natural(name, &args[3])? as usize,
                )?))
            }
            "instability" => {
                arity(name, args, 2)?;
                Ok(Value::Report(hierarchy::instability_witness_check(
                    &ord(name, &args[0])?,
                    &ord(name, &args[1])?,
                )?))
            }
            "ordadd" | "ordmul" | "ordpow" | "natadd" | "natmul" => {
                arity(name, args, 2)?;
                let a = ord(name, &args[0])?;
                let b = ord(name, &args[1])?;
                let r = match name {
                    "ordadd" => a.add(&b),
                    "ordmul" => a.mul(&b),
                    "ordpow" => a.pow(&b),
                    "natadd" => a.nat_add(&b),
                    _ => a.nat_mul(&b),
                }?;
                r.check_ceiling(self.config.eps_ceiling)?;
                Ok(Value::Ord(r))
            }
            "classify" => {
                arity(name, args, 1)?;
                let c = ord(name, &args[0])?.classify();
                let mut kinds = Vec::new();
                if c.is_additive {
                    kinds.push("additive");
                }
                if c.is_multiplicative {
                    kinds.push("multiplicative");
                }
                if c.is_epsilon {
                    kinds.push("epsilon");
                }
                if kinds.is_empty() {
                    kinds.push("none");
                }
                Ok(Value::Text(kinds.join(", ")))
            }
            "canon" => {
                arity(name, args, 2)?;
                let lambda = ord(name, &args[0])?;
                let n = natural(name, &args[1])? as usize;
                Ok(Value::List(
                    lambda.canonical_prefix(n)?.into_iter().map(Value::Ord).collect(),
                ))
            }
            "monoid" => {
                arity(name, args, 1)?;
                Ok(Value::Ord(ord(name, &args[0])?.monoid_bound()?))
            }
            "abs" => {
                arity(name, args, 1)?;
                let (x, f) = num(name, &args[0])?;
                Ok(approx(x.abs(), f))
            }
            "sign" => {
                arity(name, args, 1)?;
                let (x, f) = num(name, &args[0])?;
                let s = x.sign() as i64;
                Ok(approx(NormalForm::int(s), f))
            }
            _ => Err(Error::Eval(format!("unknown function {name}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::value::{render, Format};

    fn run(s: &Session, text: &str) -> String {
        render(&s.eval_str(text).unwrap(), Format::Text).unwrap()
    }

    #[test]
    fn spec_examples() {
        let s = Session::default();
        assert_eq!(run(&s, "ln(exp(w))"), "w");
        assert_eq!(run(&s, "g(eps_0+3)"), "eps_0 + 4");
        assert_eq!(run(&s, "member(w^(w^-(w^w)), SRF(eps_0, Nolt(w^w)))"), "false");
        assert_eq!(run(&s, "member(w^(w^-(w^w)), SRF(eps_0, Nolt(w^(w^2))))"), "true");
        assert_eq!(run(&s, "signexp(w^-1)"), "+^1 -^w");
        assert_eq!(run(&s, "length(w^w + 1)"), "w^w + 1");
        assert_eq!(run(&s, "simplest([0], [1])"), "1/2");
        assert_eq!(run(&s, "cadd(1/2, 1/4)"), "3/4");
        assert_eq!(run(&s, "ordadd(1, w)"), "w");
        assert_eq!(run(&s, "natadd(1, w)"), "w + 1");
        assert_eq!(run(&s, "classify(w^w)"), "additive, multiplicative");
        assert_eq!(run(&s, "arch(w, 3*w + 1)"), "comparable");
        assert_eq!(run(&s, "nf(\"+^2 -^1\")"), "3/2");
        assert_eq!(s.eval_str("nf(\"+^1 -^w\")").unwrap_err().kind(), "UnsupportedTransfiniteParse");
        assert_eq!(run(&s, "logatomic(w, 4)"), "true");
    }

    #[test]
    fn modes_and_flags() {
        let mut s = Session::default();
        let e = s.eval_str("exp(w + 1)").unwrap_err();
        assert_eq!(e.kind(), "NotExactlyRepresentable");
        s.config.truncated = true;
        s.config.order = 2;
        assert_eq!(run(&s, "exp(w^-1)"), "~1 + w^(-1) + w^(-2)*(1/2)");
        assert_eq!(run(&s, "exp(w^-1) + 1"), "~2 + w^(-1) + w^(-2)*(1/2)");
        let e = s.eval_str("member(exp(w^-1), Nolt(eps_0))").unwrap_err();
        assert_eq!(e.kind(), "ApproximateInput");
        assert_eq!(run(&s, "1/(1 + w^-1)"), "~1 - w^(-1) + w^(-2)");
    }

    #[test]
    fn bindings_and_errors() {
        let mut s = Session::default();
        s.exec("let x = w + 1").unwrap();
        assert_eq!(render(&s.exec("x*x").unwrap(), Format::Text).unwrap(), "w^2 + w*2 + 1");
        assert!(s.exec("let w = 2").is_err());
        assert_eq!(s.eval_str("eps_9").unwrap_err().kind(), "NotationOverflow");
        assert_eq!(s.eval_str("ln(0)").unwrap_err().kind(), "NonpositiveArgument");
        assert!(s.eval_str("ln(0)").unwrap_err().to_string().starts_with("ln:"));
        assert_eq!(s.eval_str("frob(1)").unwrap_err().kind(), "Eval");
        assert_eq!(s.eval_str("w^^2").unwrap_err().kind(), "Syntax");
    }
}
