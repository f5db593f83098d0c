//! Ordinals below epsilon_omega in Cantor normal form.
//!
//! An ordinal is a finite sum of monomials `w^e * n` with strictly
//! decreasing exponents. The fixed points `eps_k = w^eps_k` are atoms: the
//! monomial whose exponent is `eps_k` *is* `eps_k`, so it is stored with the
//! exponent [`OrdExp::Eps`] and never as a nested ordinal. This keeps the
//! representation canonical: two ordinals are equal iff they are
//! structurally identical.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default highest epsilon index accepted by parsers and sessions.
pub const DEFAULT_EPS_CEILING: u32 = 8;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum OrdExp {
    /// The exponent `eps_k`; the monomial `w^eps_k` equals `eps_k`.
    Eps(u32),
    /// Any other exponent. Never holds a bare epsilon atom.
    Ord(Box<Ordinal>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrdTerm {
    pub exp: OrdExp,
    pub coef: u64,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Ordinal {
    terms: Vec<OrdTerm>,
}

/// Result of [`Ordinal::classify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub is_additive: bool,
    pub is_multiplicative: bool,
    pub is_epsilon: bool,
}

impl OrdExp {
    pub fn value(&self) -> Ordinal {
        match self {
            OrdExp::Eps(k) => Ordinal::eps(*k),
            OrdExp::Ord(x) => (**x).clone(),
        }
    }

    pub fn from_value(x: Ordinal) -> OrdExp {
        match x.as_eps() {
            Some(k) => OrdExp::Eps(k),
            None => OrdExp::Ord(Box::new(x)),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, OrdExp::Ord(x) if x.is_zero())
    }
}

impl Ord for OrdExp {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OrdExp::Eps(a), OrdExp::Eps(b)) => a.cmp(b),
            (OrdExp::Ord(a), OrdExp::Ord(b)) => a.cmp(b),
            // `b` is not an atom, so this recurses into strictly smaller parts of `b`.
            (OrdExp::Eps(k), OrdExp::Ord(b)) => Ordinal::eps(*k).cmp(b),
            (OrdExp::Ord(a), OrdExp::Eps(k)) => (**a).cmp(&Ordinal::eps(*k)),
        }
    }
}

impl PartialOrd for OrdExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let c = a.exp.cmp(&b.exp).then(a.coef.cmp(&b.coef));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn overflow(what: &str) -> Error {
    Error::NotationOverflow(format!("finite coefficient overflow in {what}"))
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::from_u64(1)
    }

    pub fn from_u64(n: u64) -> Ordinal {
        if n == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![OrdTerm {
                exp: OrdExp::Ord(Box::new(Ordinal::zero())),
                coef: n,
            }],
        }
    }

    pub fn omega() -> Ordinal {
        Ordinal::omega_pow(Ordinal::one())
    }

    pub fn eps(k: u32) -> Ordinal {
        Ordinal {
            terms: vec![OrdTerm {
                exp: OrdExp::Eps(k),
                coef: 1,
            }],
        }
    }

    /// `w^x`; returns `x` itself when `x` is an epsilon number.
    pub fn omega_pow(x: Ordinal) -> Ordinal {
        Ordinal::monomial(x, 1)
    }

    /// `w^x * n`.
    pub fn monomial(x: Ordinal, n: u64) -> Ordinal {
        if n == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![OrdTerm {
                exp: OrdExp::from_value(x),
                coef: n,
            }],
        }
    }

    /// Builds from `(exponent, coefficient)` pairs in any order, merging
    /// equal exponents naturally.
    pub fn from_terms(terms: impl IntoIterator<Item = (Ordinal, u64)>) -> Result<Ordinal> {
        let mut acc = Ordinal::zero();
        for (e, n) in terms {
            acc = acc.nat_add(&Ordinal::monomial(e, n))?;
        }
        Ok(acc)
    }

    pub fn terms(&self) -> &[OrdTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_zero())
    }

    pub fn as_u64(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exp.is_zero() => Some(t.coef),
            _ => None,
        }
    }

    /// `Some(k)` iff this is exactly `eps_k`.
    pub fn as_eps(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [OrdTerm {
                exp: OrdExp::Eps(k),
                coef: 1,
            }] => Some(*k),
            _ => None,
        }
    }

    /// Highest epsilon index occurring anywhere in the notation.
    pub fn max_eps_index(&self) -> Option<u32> {
        self.terms
            .iter()
            .filter_map(|t| match &t.exp {
                OrdExp::Eps(k) => Some(*k),
                OrdExp::Ord(x) => x.max_eps_index(),
            })
            .max()
    }

    /// Exponent of the leading monomial; `None` for zero.
    pub fn leading_exponent(&self) -> Option<Ordinal> {
        self.terms.first().map(|t| t.exp.value())
    }

    /// The finite tail `n` in `self = limit + n`.
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some(t) if t.exp.is_zero() => t.coef,
            _ => 0,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.finite_part() > 0
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// `Some(p)` with `p + 1 == self` for successors.
    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut out = self.clone();
        let last = out.terms.last_mut().expect("successor has terms");
        last.coef -= 1;
        if last.coef == 0 {
            out.terms.pop();
        }
        Some(out)
    }

    /// Standard (left-to-right) sum.
    pub fn add(&self, other: &Ordinal) -> Result<Ordinal> {
        let Some(lead) = other.terms.first() else {
            return Ok(self.clone());
        };
        let mut terms: Vec<OrdTerm> = self
            .terms
            .iter()
            .take_while(|t| t.exp >= lead.exp)
            .cloned()
            .collect();
        let mut rest = other.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exp == lead.exp {
                last.coef = last.coef.checked_add(lead.coef).ok_or_else(|| overflow("add"))?;
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ok(Ordinal { terms })
    }

    /// Standard product `self * other`.
    pub fn mul(&self, other: &Ordinal) -> Result<Ordinal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ordinal::zero());
        }
        let lead = self.terms[0].exp.value();
        let mut acc = Ordinal::zero();
        for t in &other.terms {
            let piece = if t.exp.is_zero() {
                let mut p = self.clone();
                p.terms[0].coef = p.terms[0]
                    .coef
                    .checked_mul(t.coef)
                    .ok_or_else(|| overflow("mul"))?;
                p
            } else {
                Ordinal::monomial(lead.add(&t.exp.value())?, t.coef)
            };
            acc = acc.add(&piece)?;
        }
        Ok(acc)
    }

    /// Standard exponentiation `self ^ other`.
    pub fn pow(&self, other: &Ordinal) -> Result<Ordinal> {
        if other.is_zero() {
            if self.is_zero() {
                return Err(Error::ZeroToZero);
            }
            return Ok(Ordinal::one());
        }
        if self.is_zero() {
            return Ok(Ordinal::zero());
        }
        if *self == Ordinal::one() {
            return Ok(Ordinal::one());
        }
        let m = other.finite_part();
        let infinite_part = Ordinal {
            terms: other
                .terms
                .iter()
                .filter(|t| !t.exp.is_zero())
                .cloned()
                .collect(),
        };
        let head = if infinite_part.is_zero() {
            Ordinal::one()
        } else if self.is_finite() {
            // n^(w^b * c) = w^(w^g * c) where 1 + g = b.
            let mut e = Ordinal::zero();
            for t in &infinite_part.terms {
                let b = t.exp.value();
                let g = match b.as_u64() {
                    Some(k) => Ordinal::from_u64(k - 1),
                    None => b,
                };
                e = e.add(&Ordinal::monomial(g, t.coef))?;
            }
            Ordinal::omega_pow(e)
        } else {
            let lead = self.terms[0].exp.value();
            Ordinal::omega_pow(lead.mul(&infinite_part)?)
        };
        let tail = self.pow_finite(m)?;
        head.mul(&tail)
    }

    fn pow_finite(&self, mut m: u64) -> Result<Ordinal> {
        if let Some(n) = self.as_u64() {
            let p = u32::try_from(m)
                .ok()
                .and_then(|m| n.checked_pow(m))
                .ok_or_else(|| overflow("pow"))?;
            return Ok(Ordinal::from_u64(p));
        }
        let mut base = self.clone();
        let mut acc = Ordinal::one();
        // Associativity makes square-and-multiply valid; the factors are
        // powers of the same ordinal and therefore commute.
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Hessenberg natural sum.
    pub fn nat_add(&self, other: &Ordinal) -> Result<Ordinal> {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let pick = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.exp.cmp(&b.exp),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match pick {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let coef = self.terms[i]
                        .coef
                        .checked_add(other.terms[j].coef)
                        .ok_or_else(|| overflow("natural sum"))?;
                    terms.push(OrdTerm {
                        exp: self.terms[i].exp.clone(),
                        coef,
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Ordinal { terms })
    }

    /// Hessenberg natural product.
    pub fn nat_mul(&self, other: &Ordinal) -> Result<Ordinal> {
        let mut acc = Ordinal::zero();
        for a in &self.terms {
            for b in &other.terms {
                let e = a.exp.value().nat_add(&b.exp.value())?;
                let n = a.coef.checked_mul(b.coef).ok_or_else(|| overflow("natural product"))?;
                acc = acc.nat_add(&Ordinal::monomial(e, n))?;
            }
        }
        Ok(acc)
    }

    /// The unique `d` with `self + d == other`; `None` when `other < self`.
    pub fn left_sub(&self, other: &Ordinal) -> Option<Ordinal> {
        if other < self {
            return None;
        }
        let mut i = 0;
        while i < self.terms.len() && i < other.terms.len() && self.terms[i] == other.terms[i] {
            i += 1;
        }
        let (Some(a), Some(b)) = (self.terms.get(i), other.terms.get(i)) else {
            return Some(Ordinal {
                terms: other.terms[i..].to_vec(),
            });
        };
        if a.exp == b.exp {
            let mut terms = vec![OrdTerm {
                exp: b.exp.clone(),
                coef: b.coef - a.coef,
            }];
            terms.extend(other.terms[i + 1..].iter().cloned());
            Some(Ordinal { terms })
        } else {
            Some(Ordinal {
                terms: other.terms[i..].to_vec(),
            })
        }
    }

    pub fn classify(&self) -> Classification {
        let additive = matches!(self.terms.as_slice(), [t] if t.coef == 1);
        let multiplicative = additive && {
            let e = self.terms[0].exp.value();
            matches!(e.terms.as_slice(), [t] if t.coef == 1)
        };
        Classification {
            is_additive: additive,
            is_multiplicative: multiplicative,
            is_epsilon: self.as_eps().is_some(),
        }
    }

    /// First `n` elements of the canonical sequence converging to the
    /// epsilon number `self`.
    pub fn canonical_prefix(&self, n: usize) -> Result<Vec<Ordinal>> {
        let k = self
            .as_eps()
            .ok_or_else(|| Error::NotAnEpsilonNumber(self.to_string()))?;
        let mut out: Vec<Ordinal> = Vec::with_capacity(n);
        for i in 0..n {
            let next = match (k, i) {
                (0, 0) => Ordinal::omega(),
                (0, _) => Ordinal::omega_pow(out[i - 1].clone()),
                (_, 0) => Ordinal::eps(k - 1),
                _ => Ordinal::eps(k - 1).pow(&out[i - 1])?,
            };
            out.push(next);
        }
        Ok(out)
    }

    /// `w^alpha_hat`, where `alpha_hat` bumps every epsilon exponent of the
    /// Cantor normal form by one.
    pub fn monoid_bound(&self) -> Result<Ordinal> {
        let mut hat = Ordinal::zero();
        for t in &self.terms {
            let beta = t.exp.value();
            let beta = if beta.as_eps().is_some() {
                beta.add(&Ordinal::one())?
            } else {
                beta
            };
            hat = hat.add(&Ordinal::monomial(beta, t.coef))?;
        }
        Ok(Ordinal::omega_pow(hat))
    }

    /// Rejects epsilon atoms beyond `ceiling`.
    pub fn check_ceiling(&self, ceiling: u32) -> Result<()> {
        match self.max_eps_index() {
            Some(k) if k > ceiling => Err(Error::NotationOverflow(format!(
                "eps_{k} exceeds the configured ceiling eps_{ceiling}"
            ))),
            _ => Ok(()),
        }
    }
}

fn fmt_exp(e: &OrdExp, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        OrdExp::Eps(k) => write!(f, "eps_{k}"),
        OrdExp::Ord(x) => {
            if x.as_u64().is_some() || *x.as_ref() == Ordinal::omega() {
                write!(f, "{x}")
            } else {
                write!(f, "({x})")
            }
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match &t.exp {
                OrdExp::Eps(k) => write!(f, "eps_{k}")?,
                OrdExp::Ord(x) if x.is_zero() => {
                    write!(f, "{}", t.coef)?;
                    continue;
                }
                OrdExp::Ord(x) if **x == Ordinal::one() => write!(f, "w")?,
                e => {
                    write!(f, "w^")?;
                    fmt_exp(e, f)?;
                }
            }
            if t.coef != 1 {
                write!(f, "*{}", t.coef)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ordinal> {
        let v = crate::cli::parse_value(s)?;
        v.to_ordinal()
            .ok_or_else(|| Error::Eval(format!("{s:?} is not an ordinal")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> Ordinal {
        Ordinal::from_u64(k)
    }
    fn w() -> Ordinal {
        Ordinal::omega()
    }
    fn wp(x: Ordinal) -> Ordinal {
        Ordinal::omega_pow(x)
    }

    #[test]
    fn compare_examples() {
        let w2p1 = w().mul(&n(2)).unwrap().add(&n(1)).unwrap();
        assert!(w2p1 < wp(n(2)));
        assert!(Ordinal::eps(0) > wp(wp(w())));
        assert_eq!(wp(Ordinal::eps(0)), Ordinal::eps(0));
        assert!(Ordinal::eps(1) > wp(Ordinal::eps(0).add(&n(1)).unwrap()));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(n(1).add(&w()).unwrap(), w());
        assert_eq!(w().mul(&wp(w())).unwrap(), wp(w()));
        let e = Ordinal::eps(0);
        assert_eq!(e.pow(&e).unwrap(), wp(e.mul(&e).unwrap()));
        assert_eq!(
            w().add(&n(1)).unwrap().nat_add(&w()).unwrap(),
            w().mul(&n(2)).unwrap().add(&n(1)).unwrap()
        );
        let wp1 = w().add(&n(1)).unwrap();
        assert_eq!(
            wp1.nat_mul(&wp1).unwrap(),
            wp(n(2)).add(&w().mul(&n(2)).unwrap()).unwrap().add(&n(1)).unwrap()
        );
        assert_eq!(w().nat_add(&Ordinal::zero()).unwrap(), w());
        assert_eq!(n(2).pow(&w()).unwrap(), w());
        assert_eq!(n(2).pow(&w().add(&n(3)).unwrap()).unwrap(), w().mul(&n(8)).unwrap());
        assert_eq!(w().pow(&n(2)).unwrap(), wp(n(2)));
        assert!(matches!(Ordinal::zero().pow(&Ordinal::zero()), Err(Error::ZeroToZero)));
    }

    #[test]
    fn pow_matches_repeated_multiplication_below_omega_squared() {
        let bases = [n(2), n(3), w(), w().add(&n(1)).unwrap(), w().mul(&n(2)).unwrap().add(&n(5)).unwrap()];
        for b in &bases {
            for k in 0..5u64 {
                let mut acc = Ordinal::one();
                for _ in 0..k {
                    acc = acc.mul(b).unwrap();
                }
                assert_eq!(b.pow(&n(k)).unwrap(), acc, "{b}^{k}");
            }
            // b^(w*k + j) = (b^w)^k * b^j
            let bw = b.pow(&w()).unwrap();
            for k in 1..4u64 {
                for j in 0..3u64 {
                    let exp = w().mul(&n(k)).unwrap().add(&n(j)).unwrap();
                    let mut acc = Ordinal::one();
                    for _ in 0..k {
                        acc = acc.mul(&bw).unwrap();
                    }
                    acc = acc.mul(&b.pow(&n(j)).unwrap()).unwrap();
                    assert_eq!(b.pow(&exp).unwrap(), acc, "{b}^({exp})");
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = wp(w()).classify();
        assert!(c.is_additive && c.is_multiplicative && !c.is_epsilon);
        let c = w().mul(&n(2)).unwrap().classify();
        assert!(!c.is_additive && !c.is_multiplicative && !c.is_epsilon);
        let c = Ordinal::eps(0).classify();
        assert!(c.is_additive && c.is_multiplicative && c.is_epsilon);
        assert!(!n(1).classify().is_multiplicative);
        assert!(w().classify().is_multiplicative);
        assert!(!wp(n(2)).classify().is_multiplicative);
    }

    #[test]
    fn canonical_sequences() {
        assert_eq!(
            Ordinal::eps(0).canonical_prefix(3).unwrap(),
            vec![w(), wp(w()), wp(wp(w()))]
        );
        let e0 = Ordinal::eps(0);
        assert_eq!(
            Ordinal::eps(1).canonical_prefix(2).unwrap(),
            vec![e0.clone(), e0.pow(&e0).unwrap()]
        );
        assert_eq!(Ordinal::eps(2).canonical_prefix(1).unwrap(), vec![Ordinal::eps(1)]);
        assert!(matches!(w().canonical_prefix(2), Err(Error::NotAnEpsilonNumber(_))));
        let seq = Ordinal::eps(1).canonical_prefix(4).unwrap();
        assert!(seq.windows(2).all(|p| p[0] < p[1]));
        assert!(seq.iter().all(|x| *x < Ordinal::eps(1)));
    }

    #[test]
    fn monoid_bounds() {
        assert_eq!(w().monoid_bound().unwrap(), wp(w()));
        let e0 = Ordinal::eps(0);
        assert_eq!(
            e0.monoid_bound().unwrap(),
            wp(wp(e0.add(&n(1)).unwrap()))
        );
        assert_eq!(n(3).monoid_bound().unwrap(), wp(n(3)));
    }

    #[test]
    fn left_subtraction() {
        let a = w().add(&n(2)).unwrap();
        let b = wp(n(2)).add(&n(1)).unwrap();
        let d = a.left_sub(&b).unwrap();
        assert_eq!(a.add(&d).unwrap(), b);
        assert_eq!(n(3).left_sub(&n(5)).unwrap(), n(2));
        assert!(n(3).left_sub(&n(2)).is_none());
        let x = w().mul(&n(3)).unwrap();
        let y = w().mul(&n(5)).unwrap().add(&n(1)).unwrap();
        assert_eq!(x.add(&x.left_sub(&y).unwrap()).unwrap(), y);
    }

    #[test]
    fn rendering() {
        let x = wp(w()).add(&w().mul(&n(3)).unwrap()).unwrap().add(&n(1)).unwrap();
        assert_eq!(x.to_string(), "w^w + w*3 + 1");
        assert_eq!(wp(wp(w())).to_string(), "w^(w^w)");
        assert_eq!(Ordinal::eps(0).add(&n(4)).unwrap().to_string(), "eps_0 + 4");
        assert_eq!(n(0).to_string(), "0");
    }
}
