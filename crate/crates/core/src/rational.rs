//! Exact coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// True when the denominator is a power of two.
pub fn is_dyadic(r: &Rational) -> bool {
    let d = r.denom();
    (d & (d - BigInt::one())).is_zero()
}

/// `Some(n)` when `r == 2^-n` for some `n >= 0`.
pub fn inverse_power_of_two(r: &Rational) -> Option<u32> {
    if !r.numer().is_one() || !is_dyadic(r) {
        return None;
    }
    Some(r.denom().bits() as u32 - 1)
}

pub fn two_pow_neg(n: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << n)
}

/// `p/q`, or `p` when the value is an integer.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Eval(format!("malformed rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(p, q))
}

/// Finite sign expansion of a dyadic rational, `true` for `+`.
pub fn dyadic_signs(r: &Rational) -> Result<Vec<bool>> {
    if !is_dyadic(r) {
        return Err(Error::NonDyadicCoefficient(render(r)));
    }
    if r.is_negative() {
        return Ok(dyadic_signs(&-r)?.into_iter().map(|s| !s).collect());
    }
    let mut out = Vec::new();
    let ceil = r.ceil();
    let k = ceil
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::NotationOverflow(format!("integer part of {}", render(r))))?;
    out.extend(std::iter::repeat(true).take(k));
    if ceil == *r {
        return Ok(out);
    }
    let mut x = ceil;
    let mut step = frac(1, 2);
    x -= &step;
    out.push(false);
    while x != *r {
        step = step / int(2);
        if x < *r {
            x += &step;
            out.push(true);
        } else {
            x -= &step;
            out.push(false);
        }
    }
    Ok(out)
}

/// Value of a finite sign sequence.
pub fn from_signs(signs: &[bool]) -> Rational {
    let Some(&first) = signs.first() else {
        return Rational::zero();
    };
    let k = signs.iter().take_while(|&&s| s == first).count();
    let unit = if first { int(1) } else { int(-1) };
    let mut x = unit * int(k as i64);
    let mut step = Rational::one();
    for &s in &signs[k..] {
        step = step / int(2);
        if s {
            x += &step;
        } else {
            x -= &step;
        }
    }
    x
}

/// Exact floor as an integer.
pub fn floor_int(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}
