//! Membership in `No_<lambda` and `SRF_lambda(Gamma)`, certificates for the
//! generated groups `Gamma^up_lambda`, paths, log-atomicity, and checkers
//! for the instability and strictness witnesses.
//!
//! Membership in a generated group is only semi-decidable here: a
//! [`Certificate`] is a derivation tree that can be checked locally, so a
//! positive answer is a proof, while a failed check only says that this
//! particular derivation is wrong.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::convert::length_of;
use crate::error::{Error, Result};
use crate::explog::{exp, ln_omega_pow, EvalMode};
use crate::field::Approx;
use crate::gonshor::{g, h};
use crate::ordinal::Ordinal;
use crate::rational::{self, Rational};
use crate::surreal::NormalForm;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    /// `No_<mu`: numbers whose sign expansion is shorter than `mu`.
    NoLt { mu: Ordinal },
    /// Level `level` of `base^up_lambda`.
    GammaUp {
        base: Box<GroupSpec>,
        lambda: Ordinal,
        level: u32,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    NoLt { lambda: Ordinal },
    /// Hahn series with exponents in `group` and support of order type
    /// below `lambda`.
    Srf { lambda: Ordinal, group: GroupSpec },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::NoLt { mu } => write!(f, "Nolt({mu})"),
            GroupSpec::GammaUp {
                base,
                lambda,
                level,
            } => write!(f, "up({base}, {lambda}, {level})"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::NoLt { lambda } => write!(f, "Nolt({lambda})"),
            FieldSpec::Srf { lambda, group } => write!(f, "SRF({lambda}, {group})"),
        }
    }
}

/// One checked statement of a report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    /// Informational clauses are reported but do not decide the outcome.
    pub gating: bool,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    pub clauses: Vec<Clause>,
}

impl Report {
    fn new(check: impl Into<String>) -> Report {
        Report {
            check: check.into(),
            pass: true,
            clauses: Vec::new(),
        }
    }

    fn clause(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.pass &= holds;
        self.clauses.push(Clause {
            name: name.into(),
            holds,
            gating: true,
            detail: detail.into(),
        });
    }

    fn note(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.into(),
            holds,
            gating: false,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.check, if self.pass { "pass" } else { "FAIL" })?;
        for c in &self.clauses {
            let mark = match (c.gating, c.holds) {
                (true, true) => "ok",
                (true, false) => "FAIL",
                (false, true) => "note: yes",
                (false, false) => "note: no",
            };
            writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// `e_beta`, the `beta`-th element of the canonical sequence of `lambda`.
pub fn canonical_element(lambda: &Ordinal, beta: u32) -> Result<Ordinal> {
    let seq = lambda.canonical_prefix(beta as usize + 1)?;
    Ok(seq.last().expect("prefix of positive length").clone())
}

fn require_epsilon(lambda: &Ordinal) -> Result<()> {
    if lambda.as_eps().is_none() {
        return Err(Error::NotAnEpsilonNumber(lambda.to_string()));
    }
    Ok(())
}

/// `a in No_<mu`.
pub fn in_no_lt(a: &NormalForm, mu: &Ordinal) -> Result<bool> {
    Ok(length_of(a)? < *mu)
}

/// Group membership. For generated groups this searches for a certificate
/// and answers `false` when none is found.
pub fn in_group(a: &NormalForm, group: &GroupSpec) -> Result<bool> {
    match group {
        GroupSpec::NoLt { mu } => in_no_lt(a, mu),
        GroupSpec::GammaUp { .. } => Ok(certify(a, group)?.is_some()),
    }
}

/// Membership with the reasons spelled out.
pub fn membership_report(x: &NormalForm, field: &FieldSpec) -> Result<Report> {
    let mut r = Report::new(format!("member({x}, {field})"));
    match field {
        FieldSpec::NoLt { lambda } => {
            let l = length_of(x)?;
            r.clause("length below lambda", l < *lambda, format!("l(x) = {l}, lambda = {lambda}"));
        }
        FieldSpec::Srf { lambda, group } => {
            let n = x.terms().len();
            r.clause(
                "support order type below lambda",
                Ordinal::from_u64(n as u64) < *lambda,
                format!("finite support of {n} terms; trivially below {lambda}"),
            );
            for (i, t) in x.terms().iter().enumerate() {
                let a = t.exp.value();
                match group {
                    GroupSpec::NoLt { mu } => {
                        let l = length_of(&a)?;
                        r.clause(
                            format!("exponent {i} in Nolt({mu})"),
                            l < *mu,
                            format!("l({a}) = {l}"),
                        );
                    }
                    GroupSpec::GammaUp { .. } => {
                        let found = certify(&a, group)?.is_some();
                        let detail = if found {
                            format!("certificate found for {a}")
                        } else {
                            format!("no certificate found for {a} (semi-decision)")
                        };
                        r.clause(format!("exponent {i} in {group}"), found, detail);
                    }
                }
            }
        }
    }
    Ok(r)
}

pub fn membership(x: &NormalForm, field: &FieldSpec) -> Result<bool> {
    Ok(membership_report(x, field)?.pass)
}

/// Membership for values that may carry an approximation flag; flagged
/// values are refused.
pub fn membership_checked(x: &Approx, field: &FieldSpec) -> Result<bool> {
    if x.approximate {
        return Err(Error::ApproximateInput("member".into()));
    }
    membership(&x.value, field)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GSource {
    #[serde(with = "crate::json::rational_text")]
    pub coef: Rational,
    pub cert: Certificate,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Part {
    pub coef: i64,
    pub cert: Certificate,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Node {
    /// The claim lies in the base group `Gamma_0`.
    BaseMember,
    /// `claim = sum coef_j w^(g(source_j))`, sources from the previous level.
    GImage { sources: Vec<GSource> },
    /// `claim = h(a)` with `a` the exponent of term `exponent_index` of a
    /// previous-level element.
    HImage {
        source: Box<Certificate>,
        exponent_index: usize,
    },
    /// Integer combination of elements of the same or lower levels.
    Combination { parts: Vec<Part> },
}

/// Derivation of `claim in Gamma_level`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub level: u32,
    pub claim: NormalForm,
    #[serde(flatten)]
    pub node: Node,
}

impl Certificate {
    pub fn base(claim: NormalForm) -> Certificate {
        Certificate {
            level: 0,
            claim,
            node: Node::BaseMember,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Eval(format!("malformed certificate: {e}")))
    }
}

struct Ctx<'a> {
    base: &'a GroupSpec,
    lambda: &'a Ordinal,
    top: u32,
}

type Verdict = std::result::Result<(), String>;

fn check_node(c: &Certificate, ctx: &Ctx, at: &str) -> Result<Verdict> {
    if c.level > ctx.top {
        return Ok(Err(format!("{at}: level {} above {}", c.level, ctx.top)));
    }
    let below = |sub: &Certificate, what: &str| -> Option<String> {
        (sub.level >= c.level).then(|| {
            format!("{at}: {what} at level {} is not below level {}", sub.level, c.level)
        })
    };
    match &c.node {
        Node::BaseMember => {
            if in_group(&c.claim, ctx.base)? {
                Ok(Ok(()))
            } else {
                Ok(Err(format!("{at}: {} is not in the base group {}", c.claim, ctx.base)))
            }
        }
        Node::GImage { sources } => {
            if c.level == 0 {
                return Ok(Err(format!("{at}: g-image at level 0")));
            }
            let e = canonical_element(ctx.lambda, c.level - 1)?;
            if Ordinal::from_u64(sources.len() as u64) >= e {
                return Ok(Err(format!("{at}: support of {} terms not below e = {e}", sources.len())));
            }
            let mut terms = Vec::with_capacity(sources.len());
            for (j, s) in sources.iter().enumerate() {
                let here = format!("{at}.sources[{j}]");
                if let Some(why) = below(&s.cert, "source") {
                    return Ok(Err(why));
                }
                if !s.cert.claim.is_positive() {
                    return Ok(Err(format!("{here}: source {} is not positive", s.cert.claim)));
                }
                if let Err(why) = check_node(&s.cert, ctx, &here)? {
                    return Ok(Err(why));
                }
                let gv = g(&s.cert.claim).map_err(|e| e.within(&here))?;
                terms.push((gv, s.coef.clone()));
            }
            let value = NormalForm::from_terms(terms);
            Ok(if value == c.claim {
                Ok(())
            } else {
                Err(format!("{at}: g-image sums to {value}, claim is {}", c.claim))
            })
        }
        Node::HImage {
            source,
            exponent_index,
        } => {
            if let Some(why) = below(source, "source") {
                return Ok(Err(why));
            }
            let here = format!("{at}.source");
            if let Err(why) = check_node(source, ctx, &here)? {
                return Ok(Err(why));
            }
            let Some(t) = source.claim.terms().get(*exponent_index) else {
                return Ok(Err(format!("{at}: no term {exponent_index} in {}", source.claim)));
            };
            let hv = h(&t.exp.value()).map_err(|e| e.within(at))?;
            Ok(if hv == c.claim {
                Ok(())
            } else {
                Err(format!("{at}: h-image is {hv}, claim is {}", c.claim))
            })
        }
        Node::Combination { parts } => {
            let mut sum = NormalForm::zero();
            for (j, p) in parts.iter().enumerate() {
                let here = format!("{at}.parts[{j}]");
                if p.cert.level > c.level {
                    return Ok(Err(format!("{here}: level {} above {}", p.cert.level, c.level)));
                }
                if let Err(why) = check_node(&p.cert, ctx, &here)? {
                    return Ok(Err(why));
                }
                sum = &sum + &p.cert.claim.scale(&rational::int(p.coef));
            }
            Ok(if sum == c.claim {
                Ok(())
            } else {
                Err(format!("{at}: combination sums to {sum}, claim is {}", c.claim))
            })
        }
    }
}

fn gamma_ctx(group: &GroupSpec) -> Result<Ctx<'_>> {
    match group {
        GroupSpec::GammaUp {
            base,
            lambda,
            level,
        } => {
            require_epsilon(lambda)?;
            Ok(Ctx {
                base,
                lambda,
                top: *level,
            })
        }
        GroupSpec::NoLt { .. } => Err(Error::Precondition(
            "certificates are checked against a generated group up(base, lambda, level)".into(),
        )),
    }
}

/// Checks `c` as a proof of `x in group`; `Ok(None)` when valid, otherwise
/// the first failing node and why.
pub fn explain_certificate(
    x: &NormalForm,
    group: &GroupSpec,
    c: &Certificate,
) -> Result<Option<String>> {
    let ctx = gamma_ctx(group)?;
    if c.claim != *x {
        return Ok(Some(format!("root claims {}, not {x}", c.claim)));
    }
    Ok(check_node(c, &ctx, "root")?.err())
}

pub fn check_certificate(x: &NormalForm, group: &GroupSpec, c: &Certificate) -> Result<bool> {
    Ok(explain_certificate(x, group, c)?.is_none())
}

fn certify_at(a: &NormalForm, ctx: &Ctx, level: u32) -> Result<Option<Certificate>> {
    if in_group(a, ctx.base)? {
        return Ok(Some(Certificate::base(a.clone())));
    }
    if level == 0 || a.is_zero() {
        return Ok(None);
    }
    // a = sum r_j w^(g(c_j)) with c_j = h(e_j) from the previous level
    let mut sources = Vec::new();
    for t in a.terms() {
        let Ok(src) = h(&t.exp.value()) else {
            sources.clear();
            break;
        };
        if !src.is_positive() {
            sources.clear();
            break;
        }
        match certify_at(&src, ctx, level - 1)? {
            Some(cert) => sources.push(GSource {
                coef: t.coef.clone(),
                cert,
            }),
            None => {
                sources.clear();
                break;
            }
        }
    }
    if sources.len() == a.terms().len() {
        let cert = Certificate {
            level,
            claim: a.clone(),
            node: Node::GImage { sources },
        };
        if check_node(&cert, ctx, "candidate")?.is_ok() {
            return Ok(Some(cert));
        }
    }
    // a = h(e) with e the exponent of the previous-level element w^e
    if a.is_positive() {
        if let Ok(e) = g(a) {
            let y = NormalForm::omega_pow(e);
            if let Some(src) = certify_at(&y, ctx, level - 1)? {
                let cert = Certificate {
                    level,
                    claim: a.clone(),
                    node: Node::HImage {
                        source: Box::new(src),
                        exponent_index: 0,
                    },
                };
                if check_node(&cert, ctx, "candidate")?.is_ok() {
                    return Ok(Some(cert));
                }
            }
        }
    }
    // term by term
    if a.terms().len() > 1 {
        let mut parts = Vec::new();
        for t in a.terms() {
            let term = NormalForm::term(t.exp.clone(), t.coef.clone());
            match certify_at(&term, ctx, level)? {
                Some(cert) => parts.push(Part { coef: 1, cert }),
                None => return Ok(None),
            }
        }
        return Ok(Some(Certificate {
            level,
            claim: a.clone(),
            node: Node::Combination { parts },
        }));
    }
    Ok(None)
}

/// Searches for a certificate of `a in group` (a generated group).
pub fn certify(a: &NormalForm, group: &GroupSpec) -> Result<Option<Certificate>> {
    let ctx = gamma_ctx(group)?;
    certify_at(a, &ctx, ctx.top)
}

/// From certificates of the exponents of a purely infinite
/// `y = sum r_j w^(a_j)` (all in `Gamma_i`), the level `i+1` certificate
/// of the exponent `sum r_j w^(g(a_j))` of `exp(y)`.
pub fn derive_exp_certificate(y: &NormalForm, exponent_certs: &[Certificate]) -> Result<Certificate> {
    if exponent_certs.len() != y.terms().len() {
        return Err(Error::Precondition(
            "one certificate per exponent is required".into(),
        ));
    }
    let mut level = 0;
    let mut sources = Vec::with_capacity(exponent_certs.len());
    for (t, c) in y.terms().iter().zip(exponent_certs) {
        if c.claim != t.exp.value() {
            return Err(Error::Precondition(format!(
                "certificate for {} does not match exponent {}",
                c.claim,
                t.exp.value()
            )));
        }
        level = level.max(c.level + 1);
        sources.push(GSource {
            coef: t.coef.clone(),
            cert: c.clone(),
        });
    }
    let e = exp(y, EvalMode::Exact)?.value;
    let claim = e
        .as_term()
        .map(|t| t.exp.value())
        .ok_or_else(|| Error::Internal("exp of a purely infinite number is a monomial".into()))?;
    Ok(Certificate {
        level,
        claim,
        node: Node::GImage { sources },
    })
}

/// From a certificate of `x in Gamma_i`, level `i+1` certificates for the
/// exponents `h(x_j)` of `ln w^x`.
pub fn derive_ln_certificates(x_cert: &Certificate) -> Result<Vec<Certificate>> {
    let mut out = Vec::with_capacity(x_cert.claim.terms().len());
    for (j, t) in x_cert.claim.terms().iter().enumerate() {
        out.push(Certificate {
            level: x_cert.level + 1,
            claim: h(&t.exp.value())?,
            node: Node::HImage {
                source: Box::new(x_cert.clone()),
                exponent_index: j,
            },
        });
    }
    Ok(out)
}

/// For `x in No_<lambda`: a multiplicative `mu < lambda` with every exponent
/// of `x` in `No_<mu`, and level-0 certificates for the exponents.
pub fn certify_decomposition(
    x: &NormalForm,
    lambda: &Ordinal,
) -> Result<(Ordinal, Vec<Certificate>)> {
    require_epsilon(lambda)?;
    let mut longest = Ordinal::zero();
    for t in x.terms() {
        longest = longest.max(length_of(&t.exp.value())?);
    }
    let lead = longest.leading_exponent().unwrap_or_else(Ordinal::zero);
    let mu = Ordinal::omega_pow(Ordinal::omega_pow(lead.add(&Ordinal::one())?));
    if mu >= *lambda {
        return Err(Error::Precondition(format!(
            "exponent lengths up to {longest} need mu = {mu}, not below {lambda}"
        )));
    }
    let group = GroupSpec::GammaUp {
        base: Box::new(GroupSpec::NoLt { mu: mu.clone() }),
        lambda: lambda.clone(),
        level: 0,
    };
    let mut certs = Vec::with_capacity(x.terms().len());
    for t in x.terms() {
        let cert = Certificate::base(t.exp.value());
        if !check_certificate(&cert.claim, &group, &cert)? {
            return Err(Error::Internal(format!("base certificate for {} fails", cert.claim)));
        }
        certs.push(cert);
    }
    Ok((mu, certs))
}

/// A term `coef * w^exp`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PathStep {
    #[serde(with = "crate::json::rational_text")]
    pub coef: Rational,
    pub exp: NormalForm,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Path {
    pub steps: Vec<PathStep>,
    /// Why the path stops before the requested depth, if it does.
    pub stopped: Option<String>,
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", NormalForm::monomial(self.exp.clone(), self.coef.clone()))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", steps.join(", "))?;
        if let Some(why) = &self.stopped {
            write!(f, " ({why})")?;
        }
        Ok(())
    }
}

fn extend_paths(prefix: &mut Vec<PathStep>, depth: usize, out: &mut Vec<Path>) {
    let last = prefix.last().expect("paths start with a term");
    if prefix.len() > depth {
        out.push(Path {
            steps: prefix.clone(),
            stopped: None,
        });
        return;
    }
    match ln_omega_pow(&last.exp) {
        Ok(next) if next.is_zero() => out.push(Path {
            steps: prefix.clone(),
            stopped: Some("ln w^0 = 0".into()),
        }),
        Ok(next) => {
            for t in next.terms() {
                prefix.push(PathStep {
                    coef: t.coef.clone(),
                    exp: t.exp.value(),
                });
                extend_paths(prefix, depth, out);
                prefix.pop();
            }
        }
        Err(e) => out.push(Path {
            steps: prefix.clone(),
            stopped: Some(format!("ln step unsupported: {e}")),
        }),
    }
}

/// Every path of `x` with at most `depth` logarithm steps.
pub fn enumerate_paths(x: &NormalForm, depth: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for t in x.terms() {
        let mut prefix = vec![PathStep {
            coef: t.coef.clone(),
            exp: t.exp.value(),
        }];
        extend_paths(&mut prefix, depth, &mut out);
    }
    out
}

/// Re-checks the linkage rule with `g` instead of `h`: step `i+1` is a term
/// `s w^b` of `ln w^(a_i)` iff `a_i` has the term `s w^(g(b))`.
pub fn path_is_well_formed(x: &NormalForm, p: &Path) -> Result<bool> {
    let Some(first) = p.steps.first() else {
        return Ok(false);
    };
    let starts = x
        .terms()
        .iter()
        .any(|t| t.coef == first.coef && t.exp.value() == first.exp);
    if !starts {
        return Ok(false);
    }
    for w in p.steps.windows(2) {
        let gb = g(&w[1].exp)?;
        let linked = w[0]
            .exp
            .terms()
            .iter()
            .any(|t| t.coef == w[1].coef && t.exp.value() == gb);
        if !linked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ln_i x` is a monomial `w^(a_i)` for every `i <= k`.
pub fn log_atomic_depth(x: &NormalForm, k: usize) -> Result<bool> {
    if !x.is_positive() {
        return Err(Error::NonpositiveArgument(x.to_string()));
    }
    let mut v = x.clone();
    for i in 0..=k {
        let Some(t) = v.as_term() else {
            return Ok(false);
        };
        if !t.coef.is_one() {
            return Ok(false);
        }
        if i < k {
            v = ln_omega_pow(&t.exp.value())?;
        }
    }
    Ok(true)
}

/// `x = w^(w^-mu)` separates `SRF_lambda(No_<mu')` from `SRF_lambda(No_<mu)`.
pub fn strictness_witness_check(
    mu: &Ordinal,
    mu_prime: &Ordinal,
    lambda: &Ordinal,
    depth: usize,
) -> Result<Report> {
    require_epsilon(lambda)?;
    if !(Ordinal::omega() < *mu && mu < mu_prime && mu_prime < lambda) {
        return Err(Error::Precondition(format!(
            "need w < mu < mu' < lambda, got mu = {mu}, mu' = {mu_prime}, lambda = {lambda}"
        )));
    }
    let x = NormalForm::omega_pow(NormalForm::omega_pow(-NormalForm::from_ordinal(mu)));
    let mut r = Report::new(format!("strictness witness x = {x}"));
    let upper = FieldSpec::Srf {
        lambda: lambda.clone(),
        group: GroupSpec::NoLt { mu: mu_prime.clone() },
    };
    let lower = FieldSpec::Srf {
        lambda: lambda.clone(),
        group: GroupSpec::NoLt { mu: mu.clone() },
    };
    let multiplicative = mu.classify().is_multiplicative && mu_prime.classify().is_multiplicative;
    r.note(
        "mu and mu' multiplicative",
        multiplicative,
        "strict separation needs a multiplicative mu; the witness is checked either way",
    );
    let l = length_of(&x.terms()[0].exp.value())?;
    r.clause(
        format!("x in {upper}"),
        membership(&x, &upper)?,
        format!("l(w^-mu) = {l} < {mu_prime}"),
    );
    r.clause(
        format!("x not in {lower}"),
        !membership(&x, &lower)?,
        format!("l(w^-mu) = {l} >= {mu}"),
    );
    let paths = enumerate_paths(&x, depth);
    r.clause(
        "x has a single path",
        paths.len() == 1,
        format!("{} path(s) to depth {depth}", paths.len()),
    );
    for p in &paths {
        let complete = p.stopped.is_none() && p.steps.len() == depth + 1;
        r.clause("path reaches the requested depth", complete, p.to_string());
        r.clause("path is well formed", path_is_well_formed(&x, p)?, "g-linkage re-check");
        for (i, s) in p.steps.iter().enumerate() {
            let li = length_of(&s.exp)?;
            r.clause(
                format!("l(a_{i}) >= mu"),
                li >= *mu,
                format!("a_{i} = {}, l = {li}", s.exp),
            );
        }
    }
    r.clause(
        format!("x is log-atomic to depth {depth}"),
        log_atomic_depth(&x, depth)?,
        "each ln_i x is a monomial",
    );
    Ok(r)
}

/// `SRF_lambda(No_<mu)`, `mu = w^(w^alpha)`, is not closed under `exp`.
///
/// The report computes `exp(w^alpha)` and its length. Membership of
/// `exp(w^alpha)` itself is reported but does not gate: its only exponent
/// `w^(g(alpha))` is shorter than `mu` whenever `g(alpha) < w^alpha`. The
/// escape is witnessed by `x = w^(w^alpha)`, whose exponential
/// `w^(w^(g(w^alpha)))` has an exponent of length at least `mu`.
pub fn instability_witness_check(alpha: &Ordinal, lambda: &Ordinal) -> Result<Report> {
    require_epsilon(lambda)?;
    let w_alpha = Ordinal::omega_pow(alpha.clone());
    let mu = Ordinal::omega_pow(w_alpha.clone());
    if mu.as_eps().is_some() {
        return Err(Error::Precondition(format!(
            "mu = {mu} is an epsilon number; the escape needs a support of order type mu"
        )));
    }
    if mu >= *lambda {
        return Err(Error::Precondition(format!("mu = {mu} is not below lambda = {lambda}")));
    }
    let field = FieldSpec::Srf {
        lambda: lambda.clone(),
        group: GroupSpec::NoLt { mu: mu.clone() },
    };
    let mut r = Report::new(format!("instability witness for mu = {mu}"));
    let y = NormalForm::from_ordinal(&w_alpha);
    r.clause(format!("w^alpha in {field}"), membership(&y, &field)?, format!("w^alpha = {y}"));
    let ey = exp(&y, EvalMode::Exact)?.value;
    let ly = length_of(&ey)?;
    r.clause(
        "l(exp(w^alpha)) >= mu",
        ly >= mu,
        format!("exp(w^alpha) = {ey}, l = {ly}"),
    );
    let literal = membership(&ey, &field)?;
    r.note(
        format!("exp(w^alpha) outside {field}"),
        !literal,
        format!(
            "its exponent {} has length {}",
            ey.terms()[0].exp.value(),
            length_of(&ey.terms()[0].exp.value())?
        ),
    );
    let x = NormalForm::from_ordinal(&mu);
    r.clause(format!("x = w^(w^alpha) in {field}"), membership(&x, &field)?, format!("x = {x}"));
    let ex = exp(&x, EvalMode::Exact)?.value;
    let e_exp = ex.terms()[0].exp.value();
    let le = length_of(&e_exp)?;
    r.clause(
        format!("exp(x) outside {field}"),
        !membership(&ex, &field)?,
        format!("exp(x) = {ex}, exponent length {le} >= {mu}"),
    );
    Ok(r)
}
