//! Conversion between normal forms and sign sequences.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::rational::{self, Rational};
use crate::signseq::{Sign, SignSeq};
use crate::surreal::{Exp, NormalForm};

/// Sign sequence of an exponent.
fn exp_signs(e: &Exp) -> Result<SignSeq> {
    match e {
        Exp::Eps(k) => Ok(SignSeq::run(Sign::Plus, Ordinal::eps(*k))),
        Exp::Num(x) => nf_to_signseq(x),
    }
}

/// `a` with every minus in a position below `cut` removed.
fn drop_minuses_below(a: &SignSeq, cut: &Ordinal) -> SignSeq {
    let head = a.prefix(cut);
    let kept = head
        .runs()
        .iter()
        .filter(|(s, _)| *s == Sign::Plus)
        .cloned();
    SignSeq::from_runs(kept).concat(&a.suffix(cut))
}

/// Sign expansion of `w^a` given the (reduced) expansion of `a`, together
/// with `|a|_+`.
fn omega_power_signs(a: &SignSeq) -> Result<(SignSeq, Ordinal)> {
    let mut out = SignSeq::run(Sign::Plus, Ordinal::one());
    let mut pluses = Ordinal::zero();
    for (s, c) in a.runs() {
        match s {
            Sign::Minus => {
                let block = Ordinal::omega_pow(pluses.add(&Ordinal::one())?);
                out.push(Sign::Minus, block.mul(c)?);
            }
            Sign::Plus => {
                pluses = pluses.add(c)?;
                out.push(Sign::Plus, Ordinal::omega_pow(pluses.clone()));
            }
        }
    }
    Ok((out, pluses))
}

/// Sign expansion of `r w^a` from the reduced expansion of `a`.
fn term_signs(a: &SignSeq, r: &Rational) -> Result<SignSeq> {
    let (mut out, pluses) = omega_power_signs(a)?;
    let signs = rational::dyadic_signs(&r.abs())?;
    let block = Ordinal::omega_pow(pluses);
    for &b in signs.iter().skip(1) {
        out.push(Sign::from_bool(b), block.clone());
    }
    Ok(if r.is_negative() { out.negate() } else { out })
}

/// Sign expansion of a normal form: juxtaposition of the expansions of the
/// terms `r_i w^(a_i°)`, where `a_i°` is the reduced expansion of `a_i`.
pub fn nf_to_signseq(x: &NormalForm) -> Result<SignSeq> {
    let mut out = SignSeq::empty();
    let mut seen: Vec<SignSeq> = Vec::with_capacity(x.terms().len());
    for (i, t) in x.terms().iter().enumerate() {
        if !rational::is_dyadic(&t.coef) {
            return Err(Error::NonDyadicCoefficient(rational::render(&t.coef)));
        }
        let a = exp_signs(&t.exp)?;
        if i > 0 {
            let prev = &seen[i - 1];
            let mut marked = prev.clone();
            marked.push(Sign::Minus, Ordinal::one());
            let prev_coef = &x.terms()[i - 1].coef;
            if marked.is_prefix_of(&a) && !rational::is_dyadic(prev_coef) {
                // A minus that would be discarded after a non-dyadic
                // coefficient; such coefficients never get this far.
                return Err(Error::NonDyadicCoefficient(rational::render(prev_coef)));
            }
        }
        let cut = seen
            .iter()
            .map(|b| b.lcp(&a))
            .max()
            .unwrap_or_else(Ordinal::zero);
        let reduced = drop_minuses_below(&a, &cut);
        out = out.concat(&term_signs(&reduced, &t.coef)?);
        seen.push(a);
    }
    Ok(out)
}

/// Value of a finite sign sequence (a dyadic rational).
pub fn signseq_to_nf(s: &SignSeq) -> Result<NormalForm> {
    let bits = s.to_bools().ok_or(Error::UnsupportedTransfiniteParse)?;
    Ok(NormalForm::constant(rational::from_signs(&bits)))
}

/// The ordinal length of the sign expansion.
pub fn length_of(x: &NormalForm) -> Result<Ordinal> {
    nf_to_signseq(x)?.length()
}

/// `|x|_+` of the sign expansion.
pub fn plus_count_of(x: &NormalForm) -> Result<Ordinal> {
    nf_to_signseq(x)?.plus_count()
}

/// Dyadic rational to sign sequence.
pub fn rational_signs(r: &Rational) -> Result<SignSeq> {
    if r.is_zero() {
        return Ok(SignSeq::empty());
    }
    Ok(SignSeq::from_bools(&rational::dyadic_signs(r)?))
}
