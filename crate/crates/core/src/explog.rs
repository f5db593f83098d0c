//! Exponential and logarithm.
//!
//! On purely infinite arguments `exp` is exact:
//! `exp(sum r_i w^(a_i)) = w^(sum r_i w^(g(a_i)))`; dually
//! `ln w^(sum r_i w^(a_i)) = sum r_i w^(h(a_i))`. Real and infinitesimal
//! parts need the Taylor series, which only truncated mode evaluates; the
//! result then carries an approximation flag.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{eval_series, split_leading, Approx};
use crate::gonshor::{g, h};
use crate::rational::{self, Rational};
use crate::surreal::NormalForm;

/// `ln 2` to 40 decimal places, the default for range reduction.
pub const LN2_DEFAULT: &str =
    "6931471805599453094172321214581765680755/10000000000000000000000000000000000000000";

pub fn default_ln2() -> Rational {
    rational::parse(LN2_DEFAULT).expect("constant is a valid rational")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvalMode {
    Exact,
    /// Series are cut after `K` correction terms.
    Truncated(u32),
}

impl FromStr for EvalMode {
    type Err = Error;

    /// `exact`, `truncated` (order 4) or `truncated:K`.
    fn from_str(s: &str) -> Result<EvalMode> {
        match s.split_once(':') {
            None if s == "exact" => Ok(EvalMode::Exact),
            None if s == "truncated" => Ok(EvalMode::Truncated(4)),
            Some(("truncated", k)) => match k.parse::<u32>() {
                Ok(k) if k >= 1 => Ok(EvalMode::Truncated(k)),
                _ => Err(Error::Precondition(format!("bad truncation order {k:?}"))),
            },
            _ => Err(Error::Precondition(format!("unknown mode {s:?}"))),
        }
    }
}

/// `x = purely_infinite + real_part + infinitesimal`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub purely_infinite: NormalForm,
    pub real_part: Rational,
    pub infinitesimal: NormalForm,
}

pub fn decompose(x: &NormalForm) -> Decomposition {
    Decomposition {
        purely_infinite: x.purely_infinite_part(),
        real_part: x.real_part(),
        infinitesimal: x.infinitesimal_part(),
    }
}

/// `exp` of a purely infinite number, exactly.
fn exp_purely_infinite(x: &NormalForm) -> Result<NormalForm> {
    let mut exponent = Vec::with_capacity(x.terms().len());
    for t in x.terms() {
        exponent.push((g(&t.exp.value())?, t.coef.clone()));
    }
    Ok(NormalForm::omega_pow(NormalForm::from_terms(exponent)))
}

fn factorial_series(k: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(k as usize + 1);
    let mut f = Rational::one();
    for i in 0..=k {
        if i > 0 {
            f = f / rational::int(i64::from(i));
        }
        out.push(f.clone());
    }
    out
}

/// `sum_{k<=K} t^k / k!`.
pub fn exp_series(t: &NormalForm, k: u32) -> NormalForm {
    eval_series(&factorial_series(k), t)
}

/// `sum_{1<=i<=K} (-1)^(i-1) t^i / i`.
pub fn ln1p_series(t: &NormalForm, k: u32) -> NormalForm {
    let coefs: Vec<Rational> = (0..=k)
        .map(|i| match i {
            0 => Rational::zero(),
            i if i % 2 == 1 => Rational::new(BigInt::one(), BigInt::from(i)),
            i => Rational::new(-BigInt::one(), BigInt::from(i)),
        })
        .collect();
    eval_series(&coefs, t)
}

pub fn exp(x: &NormalForm, mode: EvalMode) -> Result<Approx> {
    let parts = decompose(x);
    let head = exp_purely_infinite(&parts.purely_infinite).map_err(|e| e.within("exp"))?;
    let appreciable = !parts.real_part.is_zero() || !parts.infinitesimal.is_zero();
    match mode {
        EvalMode::Exact if appreciable => Err(Error::NotExactlyRepresentable(format!(
            "exp({x}) has real part {} and infinitesimal part {}; use truncated mode",
            rational::render(&parts.real_part),
            parts.infinitesimal
        ))),
        EvalMode::Exact => Ok(Approx::exact(head)),
        EvalMode::Truncated(_) if !appreciable => Ok(Approx::exact(head)),
        EvalMode::Truncated(k) => {
            let real = exp_series(&NormalForm::constant(parts.real_part), k);
            let small = exp_series(&parts.infinitesimal, k);
            Ok(Approx {
                value: &(&head * &real) * &small,
                approximate: true,
            })
        }
    }
}

/// `ln w^a = sum r_i w^(h(a_i))`.
pub fn ln_omega_pow(a: &NormalForm) -> Result<NormalForm> {
    let mut terms = Vec::with_capacity(a.terms().len());
    for t in a.terms() {
        terms.push((h(&t.exp.value())?, t.coef.clone()));
    }
    Ok(NormalForm::from_terms(terms))
}

/// Rational approximation of `ln r` for `r > 0`: `r = 2^j u` with
/// `u` in `[3/4, 3/2)`, then `j ln2 + ln(1 + (u - 1))` by the series.
pub fn ln_rational(r: &Rational, k: u32, ln2: &Rational) -> Result<Rational> {
    if !r.is_positive() {
        return Err(Error::NonpositiveArgument(rational::render(r)));
    }
    let two = rational::int(2);
    let mut u = r.clone();
    let mut j: i64 = 0;
    while u >= rational::frac(3, 2) {
        u = &u / &two;
        j += 1;
    }
    while u < rational::frac(3, 4) {
        u = &u * &two;
        j -= 1;
    }
    let t = NormalForm::constant(&u - Rational::one());
    let series = ln1p_series(&t, k).real_part();
    Ok(ln2 * rational::int(j) + series)
}

pub fn ln(x: &NormalForm, mode: EvalMode) -> Result<Approx> {
    ln_with(x, mode, &default_ln2())
}

/// `ln` with an explicit constant for `ln 2` in truncated mode.
pub fn ln_with(x: &NormalForm, mode: EvalMode, ln2: &Rational) -> Result<Approx> {
    if !x.is_positive() {
        return Err(Error::NonpositiveArgument(x.to_string()));
    }
    let (lead, delta) = split_leading(x)?;
    let t = lead.as_term().expect("leading part is one term");
    let a0 = t.exp.value();
    let head = ln_omega_pow(&a0).map_err(|e| e.within("ln"))?;
    let exact = t.coef.is_one() && delta.is_zero();
    match mode {
        _ if exact => Ok(Approx::exact(head)),
        EvalMode::Exact => Err(Error::NotExactlyRepresentable(format!(
            "ln({x}) needs a single monomial w^a with coefficient 1; use truncated mode"
        ))),
        EvalMode::Truncated(k) => {
            let real = if t.coef.is_one() {
                Rational::zero()
            } else {
                ln_rational(&t.coef, k, ln2)?
            };
            let value = &(&head + &NormalForm::constant(real)) + &ln1p_series(&delta, k);
            Ok(Approx {
                value,
                approximate: true,
            })
        }
    }
}

/// `ln_n x`, each step exact.
pub fn ln_iter(x: &NormalForm, n: u32) -> Result<NormalForm> {
    let mut v = x.clone();
    for _ in 0..n {
        v = ln(&v, EvalMode::Exact)?.value;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn nf(s: &str) -> NormalForm {
        s.parse().unwrap()
    }
    fn c(n: i64) -> NormalForm {
        NormalForm::int(n)
    }

    #[test]
    fn decomposition() {
        let d = decompose(&nf("w^2 + 3*w + 5 + w^(-1)*(1/2)"));
        assert_eq!(d.purely_infinite, nf("w^2 + 3*w"));
        assert_eq!(d.real_part, rational::int(5));
        assert_eq!(d.infinitesimal, nf("w^(-1)/2"));
        let z = decompose(&c(0));
        assert!(z.purely_infinite.is_zero() && z.real_part.is_zero() && z.infinitesimal.is_zero());
        assert_eq!(decompose(&nf("w^(1/2)")).purely_infinite, nf("w^(1/2)"));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp(&nf("w"), EvalMode::Exact).unwrap().value, nf("w^w"));
        assert_eq!(exp(&c(0), EvalMode::Exact).unwrap().value, c(1));
        let e = exp(&nf("w^(-1)"), EvalMode::Truncated(2)).unwrap();
        assert!(e.approximate);
        assert_eq!(e.value, nf("1 + w^(-1) + w^(-2)/2"));
        assert!(matches!(
            exp(&nf("w + 1"), EvalMode::Exact),
            Err(Error::NotExactlyRepresentable(_))
        ));
        assert_eq!(exp(&nf("w^2 - 3*w"), EvalMode::Exact).unwrap().value, nf("w^(w^2 - 3*w)"));
        assert_eq!(exp(&nf("eps_0"), EvalMode::Exact).unwrap().value, nf("w^(w^(eps_0 + 1))"));
    }

    #[test]
    fn ln_examples() {
        assert_eq!(ln(&nf("w"), EvalMode::Exact).unwrap().value, nf("w^(w^(-1))"));
        assert_eq!(ln(&nf("w^(w^2)"), EvalMode::Exact).unwrap().value, nf("w^2"));
        let l = ln(&nf("1 + w^(-1)"), EvalMode::Truncated(2)).unwrap();
        assert!(l.approximate);
        assert_eq!(l.value, nf("w^(-1) - w^(-2)/2"));
        assert!(matches!(ln(&c(0), EvalMode::Exact), Err(Error::NonpositiveArgument(_))));
        assert!(matches!(ln(&nf("-w"), EvalMode::Exact), Err(Error::NonpositiveArgument(_))));
        assert!(matches!(
            ln(&nf("2*w"), EvalMode::Exact),
            Err(Error::NotExactlyRepresentable(_))
        ));
        for n in 1..=4 {
            let expect = NormalForm::omega_pow(NormalForm::omega_pow(c(-(n as i64))));
            assert_eq!(ln_iter(&nf("w"), n).unwrap(), expect);
        }
        assert_eq!(ln(&nf("w^(w^(-1))"), EvalMode::Exact).unwrap().value, nf("w^(w^(-2))"));
    }

    #[test]
    fn ln_of_rationals() {
        let ln2 = default_ln2();
        assert_eq!(ln_rational(&rational::int(2), 5, &ln2).unwrap(), ln2);
        assert_eq!(ln_rational(&rational::int(1), 5, &ln2).unwrap(), Rational::zero());
        let a = ln_rational(&rational::int(3), 12, &ln2).unwrap();
        let err = (a - frac(10986122886681, 10000000000000)).abs();
        assert!(err < frac(1, 1000));
        assert!(ln_rational(&rational::int(-3), 4, &ln2).is_err());
    }

    #[test]
    fn mode_text() {
        assert_eq!("exact".parse::<EvalMode>().unwrap(), EvalMode::Exact);
        assert_eq!("truncated:3".parse::<EvalMode>().unwrap(), EvalMode::Truncated(3));
        assert!("truncated:0".parse::<EvalMode>().is_err());
    }
}
