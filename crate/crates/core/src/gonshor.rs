//! Gonshor's maps `g` and `h` on a documented fragment of the surreals.
//!
//! `g` describes the exponential of purely infinite numbers,
//! `exp(sum r_i w^(a_i)) = w^(sum r_i w^(g(a_i)))`, and `h` is its inverse,
//! `ln w^(w^a) = w^(h(a))`. Both are defined by transfinite bracket
//! recursions; here they are computed by closed forms on the fragments
//! where those are known, and by the bracket recursion itself on finite
//! sign sequences. Every branch that applies is evaluated and all results
//! must coincide; inputs outside the fragment are refused with a typed
//! error instead of being guessed.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::convert::{nf_to_signseq, rational_signs};
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::rational::{self, Rational};
use crate::signseq::{simplest_between, Sign, SignSeq};
use crate::surreal::{Exp, NormalForm};

/// Longest finite sign sequence handled by the bracket recursions.
pub const BRACKET_LENGTH_CAP: usize = 64;

/// Which rule produced a value of `g` or `h`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    /// Bracket recursion over the prefixes of a finite sign sequence.
    Bracket,
    /// Ordinal argument.
    Ordinal,
    /// `2^-n w^-b` with `b` an ordinal, and its inverse.
    InfinitesimalMonomial,
    /// `r w^-m` for a dyadic `r` in `(0, 1]`, confirmed by the bracket for `h`.
    DyadicMonomial,
    /// `eps + s` with `s` a nonnegative dyadic, and its inverse.
    EpsilonShift,
    /// Strictly between `eps_k + n` (all `n`) and an ordinal below
    /// `eps_(k+1)`, or above every `n w^-1` and below an ordinal below
    /// `eps_0`; `g` and `h` are the identity there.
    Sandwich,
    /// `w^c` with `c = -b`, `b` an ordinal (the prefix hypothesis holds
    /// vacuously).
    OmegaPower,
    /// `h(-a) = w^(-a-1)` for an ordinal `a`.
    NegativeOrdinal,
}

fn dyadic_constant(x: &NormalForm) -> Option<Rational> {
    x.as_constant().filter(rational::is_dyadic)
}

/// `x = eps_k + s` with `s` a real constant.
fn epsilon_plus_constant(x: &NormalForm) -> Option<(u32, Rational)> {
    match x.terms() {
        [t] => match t.exp {
            Exp::Eps(k) if t.coef.is_one() => Some((k, Rational::zero())),
            _ => None,
        },
        [t, u] => match t.exp {
            Exp::Eps(k) if t.coef.is_one() && u.exp.is_zero() => Some((k, u.coef.clone())),
            _ => None,
        },
        _ => None,
    }
}

/// Is there an ordinal `alpha` with `x < alpha < eps_k`?
fn ordinal_between(x: &NormalForm, k: u32) -> bool {
    let Some(lead) = x.terms().first() else {
        return true;
    };
    if lead.coef.is_negative() {
        return true;
    }
    match &lead.exp {
        Exp::Eps(j) => *j < k,
        // `w^beta` for an ordinal `beta` above the leading exponent works
        Exp::Num(e) => ordinal_between(e, k),
    }
}

/// Sandwich hypothesis, checked on the normal form.
fn sandwich(x: &NormalForm) -> bool {
    if !x.is_positive() {
        return false;
    }
    let top = x.max_eps_index().map_or(0, |k| k + 1);
    for k in 0..=top {
        let rest = x - &NormalForm::eps(k);
        let above_all_shifts = rest.is_positive()
            && rest.leading_exponent().is_some_and(|e| e.is_positive());
        if above_all_shifts && ordinal_between(x, k + 1) {
            return true;
        }
    }
    let above_infinitesimals = x
        .leading_exponent()
        .is_some_and(|e| e > NormalForm::int(-1));
    above_infinitesimals && ordinal_between(x, 0)
}

/// Splits `x` as `-b + c` with `b` an ordinal made of the infinite terms
/// and `c` the real part; `None` when `x` has other terms.
fn negative_ordinal_plus_constant(x: &NormalForm) -> Option<(Ordinal, Rational)> {
    if !x.infinitesimal_part().is_zero() {
        return None;
    }
    let b = (-x.purely_infinite_part()).to_ordinal()?;
    Some((b, x.real_part()))
}

/// `(-b) + c` for ordinal `b`.
fn minus_ordinal_plus(b: &Ordinal, c: &Rational) -> NormalForm {
    &NormalForm::constant(c.clone()) - &NormalForm::from_ordinal(b)
}

/// `x = r w^(-b)`: returns `(r, b)` for an ordinal `b`.
fn monomial_with_negative_ordinal_exponent(x: &NormalForm) -> Option<(Rational, Ordinal)> {
    let t = x.as_term()?;
    let b = (-t.exp.value()).to_ordinal()?;
    Some((t.coef.clone(), b))
}

fn sign_len(s: &SignSeq) -> Option<usize> {
    s.to_bools().map(|b| b.len())
}

/// Runs `f` over the prefixes of the finite expansion of `x`, shortest
/// first, and returns the value at `x` itself.
/// `f` receives the prefix and the values already computed at its own
/// prefixes (indexed by length).
fn bracket_over_prefixes(
    bits: &[bool],
    mut f: impl FnMut(&[bool], &[SignSeq]) -> Result<SignSeq>,
) -> Result<SignSeq> {
    let mut values: Vec<SignSeq> = Vec::with_capacity(bits.len() + 1);
    for n in 0..=bits.len() {
        let v = f(&bits[..n], &values)?;
        values.push(v);
    }
    Ok(values.pop().expect("at least the empty prefix"))
}

/// `g` on a positive dyadic by the recursion `g(x) = ⟨0, g(x') | g(x'')⟩`
/// (`c(x) = 0` since `x` is appreciable), `x'`, `x''` ranging over the
/// nonzero prefixes below and above `x`.
fn g_bracket(r: &Rational) -> Result<Option<SignSeq>> {
    let s = rational_signs(r)?;
    let bits = s.to_bools().expect("dyadic expansions are finite");
    if bits.len() > BRACKET_LENGTH_CAP {
        return Ok(None);
    }
    let out = bracket_over_prefixes(&bits, |prefix, earlier| {
        if prefix.is_empty() {
            // the value at the empty prefix is never used
            return Ok(SignSeq::empty());
        }
        let mut left = vec![SignSeq::empty()];
        let mut right = Vec::new();
        for (k, gv) in earlier.iter().enumerate().skip(1) {
            // prefix of length k is below `prefix` iff the next sign is +
            if prefix[k] {
                left.push(gv.clone());
            } else {
                right.push(gv.clone());
            }
        }
        simplest_between(&left, &right)
    })?;
    Ok(Some(out))
}

/// Sign expansion of `lim_n w^b / 2^n`: the expansion of `w^b` followed
/// by `w^(|b|_+ + 1)` minuses. A positive `z` satisfies `z < w^b / n` for
/// every `n` iff `z` lies below this sequence or extends it.
fn archimedean_bound(b: &NormalForm) -> Result<SignSeq> {
    let pluses = nf_to_signseq(b)?.plus_count()?;
    let mut bound = nf_to_signseq(&NormalForm::omega_pow(b.clone()))?;
    bound.push(
        Sign::Minus,
        Ordinal::omega_pow(pluses.add(&Ordinal::one())?),
    );
    Ok(bound)
}

/// `h` on a dyadic by `h(b) = ⟨0, h(b') | h(b''), w^b / n⟩`, as a sign
/// sequence.
fn h_bracket_signs(r: &Rational) -> Result<Option<SignSeq>> {
    let s = rational_signs(r)?;
    let bits = s.to_bools().expect("dyadic expansions are finite");
    if bits.len() > BRACKET_LENGTH_CAP {
        return Ok(None);
    }
    let out = bracket_over_prefixes(&bits, |prefix, earlier| {
        let b = NormalForm::constant(rational::from_signs(prefix));
        let mut left = vec![SignSeq::empty()];
        let mut right = Vec::new();
        for (k, hv) in earlier.iter().enumerate() {
            if prefix[k] {
                left.push(hv.clone());
            } else {
                right.push(hv.clone());
            }
        }
        let bound = archimedean_bound(&b)?;
        let lo = left.iter().max().expect("left set holds 0").clone();
        if lo >= bound && !bound.is_prefix_of(&lo) {
            return Err(Error::Internal(format!(
                "h bracket at {b}: lower option {lo} above the Archimedean bound"
            )));
        }
        let upper_min = right.iter().min().cloned();
        match upper_min {
            Some(u) if u <= bound => simplest_between(&left, &[u]),
            _ => {
                let inside = simplest_between(&left, &[bound.clone()])?;
                let bound_admissible = left.iter().all(|l| *l < bound)
                    && right.iter().all(|u| bound < *u);
                if bound_admissible && bound.is_prefix_of(&inside) {
                    Ok(bound)
                } else {
                    Ok(inside)
                }
            }
        }
    })?;
    Ok(Some(out))
}

/// Closed-form candidate for `h(b)` on dyadics: `b` itself when `b > 0`,
/// and `r w^-m` when `b = -m + r` with `r` in `(0, 1]`.
fn h_dyadic_candidate(b: &Rational) -> Result<NormalForm> {
    if b.is_positive() {
        return Ok(NormalForm::constant(b.clone()));
    }
    let m = rational::floor_int(&-b) + num_bigint::BigInt::one();
    let r = b + Rational::from_integer(m.clone());
    let m = m
        .to_i64()
        .ok_or_else(|| Error::NotationOverflow(format!("integer part of {}", rational::render(b))))?;
    Ok(NormalForm::monomial(NormalForm::int(-m), r))
}

/// `h(b)` for a dyadic `b` by the bracket, converted back to a normal form
/// by matching the closed-form candidate. `None` when the bracket is out
/// of reach (too long).
fn h_bracket(b: &Rational) -> Result<Option<NormalForm>> {
    let Some(signs) = h_bracket_signs(b)? else {
        return Ok(None);
    };
    let candidate = h_dyadic_candidate(b)?;
    if nf_to_signseq(&candidate)? == signs {
        Ok(Some(candidate))
    } else {
        Err(Error::UnsupportedHDomain(format!(
            "{}: bracket value {signs} has no known normal form",
            rational::render(b)
        )))
    }
}

fn agree(
    op: &str,
    x: &NormalForm,
    results: Vec<(Branch, NormalForm)>,
) -> Result<Option<(Branch, NormalForm)>> {
    let mut it = results.into_iter();
    let Some(first) = it.next() else {
        return Ok(None);
    };
    for (branch, v) in it {
        if v != first.1 {
            return Err(Error::Internal(format!(
                "{op}({x}): {:?} gives {} but {:?} gives {v}",
                first.0, first.1, branch
            )));
        }
    }
    Ok(Some(first))
}

/// Every applicable closed form / recursion for `g(a)`.
pub fn g_branches(a: &NormalForm) -> Result<Vec<(Branch, NormalForm)>> {
    if !a.is_positive() {
        return Err(Error::PositiveRequired(a.to_string()));
    }
    let mut out = Vec::new();
    if let Some(r) = dyadic_constant(a) {
        if let Some(s) = g_bracket(&r)? {
            if sign_len(&s).is_some() {
                out.push((Branch::Bracket, crate::convert::signseq_to_nf(&s)?));
            }
        }
    }
    if let Some(o) = a.to_ordinal() {
        let shifted = epsilon_plus_constant(a).is_some();
        let v = if shifted {
            a + &NormalForm::one()
        } else {
            NormalForm::from_ordinal(&o)
        };
        out.push((Branch::Ordinal, v));
    }
    if let Some((r, b)) = monomial_with_negative_ordinal_exponent(a) {
        if rational::inverse_power_of_two(&r).is_some() {
            out.push((Branch::InfinitesimalMonomial, minus_ordinal_plus(&b, &r)));
        }
        if let Some(m) = b.as_u64() {
            let in_unit = r.is_positive() && r <= Rational::one() && rational::is_dyadic(&r);
            if m >= 1 && in_unit {
                let target = minus_ordinal_plus(&b, &r);
                let target_r = target.as_constant().expect("finite b gives a constant");
                if h_bracket(&target_r).ok().flatten().as_ref() == Some(a) {
                    out.push((Branch::DyadicMonomial, target));
                }
            }
        }
        if r.is_one() && !b.is_zero() {
            // g(w^c) = c_+ (or the longest prefix of c above c): both give -b + 1
            out.push((Branch::OmegaPower, minus_ordinal_plus(&b, &Rational::one())));
        }
    }
    if let Some((_, s)) = epsilon_plus_constant(a) {
        if !s.is_negative() && rational::is_dyadic(&s) {
            out.push((Branch::EpsilonShift, a + &NormalForm::one()));
        }
    }
    if sandwich(a) {
        out.push((Branch::Sandwich, a.clone()));
    }
    Ok(out)
}

/// Every applicable closed form / recursion for `h(b)`.
pub fn h_branches(b: &NormalForm) -> Result<Vec<(Branch, NormalForm)>> {
    let mut out = Vec::new();
    if let Some(a) = (-b).to_ordinal() {
        let e = &(-NormalForm::from_ordinal(&a)) - &NormalForm::one();
        out.push((Branch::NegativeOrdinal, NormalForm::omega_pow(e)));
    }
    if let Some(r) = dyadic_constant(b) {
        if let Some(v) = h_bracket(&r)? {
            out.push((Branch::Bracket, v));
        }
    }
    if let Some(o) = b.to_ordinal().filter(|o| !o.is_zero()) {
        match epsilon_plus_constant(b) {
            Some((_, s)) if s.is_zero() => {}
            Some(_) => out.push((Branch::Ordinal, b - &NormalForm::one())),
            None => out.push((Branch::Ordinal, NormalForm::from_ordinal(&o))),
        }
    }
    if let Some((_, t)) = epsilon_plus_constant(b) {
        if t >= Rational::one() && rational::is_dyadic(&t) {
            out.push((Branch::EpsilonShift, b - &NormalForm::one()));
        }
    }
    if let Some((beta, c)) = negative_ordinal_plus_constant(b) {
        // -beta + c = -(beta + m) + 2^-n with m the shift making c + m lie in (0, 1]
        let m = rational::floor_int(&-&c) + num_bigint::BigInt::one();
        let unit = &c + Rational::from_integer(m.clone());
        if let (Some(m), Some(_)) = (m.to_u64(), rational::inverse_power_of_two(&unit)) {
            let full = beta.add(&Ordinal::from_u64(m))?;
            let e = -NormalForm::from_ordinal(&full);
            out.push((Branch::InfinitesimalMonomial, NormalForm::monomial(e, unit)));
        }
    }
    if sandwich(b) {
        out.push((Branch::Sandwich, b.clone()));
    }
    Ok(out)
}

/// `g(a)` for `a > 0` in the supported fragment.
pub fn g(a: &NormalForm) -> Result<NormalForm> {
    let found = agree("g", a, g_branches(a)?)?;
    found
        .map(|(_, v)| v)
        .ok_or_else(|| Error::UnsupportedGDomain(a.to_string()))
}

/// `h(b)` for `b` in the supported fragment.
pub fn h(b: &NormalForm) -> Result<NormalForm> {
    let found = agree("h", b, h_branches(b)?)?;
    found
        .map(|(_, v)| v)
        .ok_or_else(|| Error::UnsupportedHDomain(b.to_string()))
}

/// The rule that `g` used on `a`.
pub fn g_branch(a: &NormalForm) -> Result<Branch> {
    agree("g", a, g_branches(a)?)?
        .map(|(b, _)| b)
        .ok_or_else(|| Error::UnsupportedGDomain(a.to_string()))
}

/// The rule that `h` used on `b`.
pub fn h_branch(b: &NormalForm) -> Result<Branch> {
    agree("h", b, h_branches(b)?)?
        .map(|(br, _)| br)
        .ok_or_else(|| Error::UnsupportedHDomain(b.to_string()))
}
