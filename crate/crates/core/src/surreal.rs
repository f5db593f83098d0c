//! Surreal numbers with finite support in Hahn normal form
//! `sum r_i w^(a_i)`, exponents strictly decreasing, coefficients rational.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ordinal::{OrdExp, Ordinal};
use crate::rational::{self, Rational};

/// Exponent of a term. `Eps(k)` marks the fixed point `w^eps_k = eps_k`;
/// `Num` never holds a bare epsilon atom.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Exp {
    Eps(u32),
    Num(Box<NormalForm>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub exp: Exp,
    pub coef: Rational,
}

/// A surreal number in normal form. The empty sum is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NormalForm {
    terms: Vec<Term>,
}

/// Archimedean comparison of two nonzero numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArchRelation {
    MuchLess,
    Comparable,
    MuchGreater,
}

impl Exp {
    pub fn value(&self) -> NormalForm {
        match self {
            Exp::Eps(k) => NormalForm::eps(*k),
            Exp::Num(x) => (**x).clone(),
        }
    }

    pub fn from_value(x: NormalForm) -> Exp {
        match x.as_eps() {
            Some(k) => Exp::Eps(k),
            None => Exp::Num(Box::new(x)),
        }
    }

    pub fn zero() -> Exp {
        Exp::Num(Box::new(NormalForm::zero()))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exp::Num(x) if x.is_zero())
    }

    fn sign(&self) -> Ordering {
        match self {
            Exp::Eps(_) => Ordering::Greater,
            Exp::Num(x) => x.sign(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exp::Eps(a), Exp::Eps(b)) => a.cmp(b),
            (Exp::Num(a), Exp::Num(b)) => a.cmp(b),
            (Exp::Eps(k), Exp::Num(b)) => NormalForm::eps(*k).cmp(b),
            (Exp::Num(a), Exp::Eps(k)) => (**a).cmp(&NormalForm::eps(*k)),
        }
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn coef_sign(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

impl Ord for NormalForm {
    /// Surreal order, read off the first position where the two term
    /// streams differ.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut i = 0;
        loop {
            match (self.terms.get(i), other.terms.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(a), None) => return coef_sign(&a.coef),
                (None, Some(b)) => return coef_sign(&b.coef).reverse(),
                (Some(a), Some(b)) => match a.exp.cmp(&b.exp) {
                    Ordering::Greater => return coef_sign(&a.coef),
                    Ordering::Less => return coef_sign(&b.coef).reverse(),
                    Ordering::Equal => {
                        let c = a.coef.cmp(&b.coef);
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                },
            }
            i += 1;
        }
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl NormalForm {
    pub fn zero() -> NormalForm {
        NormalForm { terms: Vec::new() }
    }

    pub fn one() -> NormalForm {
        NormalForm::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> NormalForm {
        NormalForm::term(Exp::zero(), r)
    }

    pub fn int(n: i64) -> NormalForm {
        NormalForm::constant(rational::int(n))
    }

    pub fn omega() -> NormalForm {
        NormalForm::omega_pow(NormalForm::one())
    }

    pub fn eps(k: u32) -> NormalForm {
        NormalForm::term(Exp::Eps(k), Rational::one())
    }

    /// The monomial `w^a`.
    pub fn omega_pow(a: NormalForm) -> NormalForm {
        NormalForm::monomial(a, Rational::one())
    }

    /// The term `r * w^a`.
    pub fn monomial(a: NormalForm, r: Rational) -> NormalForm {
        NormalForm::term(Exp::from_value(a), r)
    }

    pub fn term(exp: Exp, coef: Rational) -> NormalForm {
        if coef.is_zero() {
            return NormalForm::zero();
        }
        NormalForm {
            terms: vec![Term { exp, coef }],
        }
    }

    /// Sums arbitrary `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (NormalForm, Rational)>) -> NormalForm {
        let mut map: BTreeMap<Exp, Rational> = BTreeMap::new();
        for (e, r) in terms {
            *map.entry(Exp::from_value(e)).or_insert_with(Rational::zero) += r;
        }
        NormalForm::from_map(map)
    }

    fn from_map(map: BTreeMap<Exp, Rational>) -> NormalForm {
        NormalForm {
            terms: map
                .into_iter()
                .rev()
                .filter(|(_, r)| !r.is_zero())
                .map(|(exp, coef)| Term { exp, coef })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sign(&self) -> Ordering {
        self.terms
            .first()
            .map_or(Ordering::Equal, |t| coef_sign(&t.coef))
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// `Some(k)` iff this is exactly `eps_k`.
    pub fn as_eps(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [Term {
                exp: Exp::Eps(k),
                coef,
            }] if coef.is_one() => Some(*k),
            _ => None,
        }
    }

    /// `Some(r)` when the number is a real constant (possibly zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.exp.is_zero() => Some(t.coef.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_constant()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }

    /// The single term, when there is exactly one.
    pub fn as_term(&self) -> Option<&Term> {
        match self.terms.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Leading exponent `a_0`, so that `self ≍ w^(a_0)`.
    pub fn leading_exponent(&self) -> Option<NormalForm> {
        self.terms.first().map(|t| t.exp.value())
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coef)
    }

    /// Terms with exponent in the given sign class, as a number.
    fn filter_terms(&self, keep: impl Fn(&Exp) -> bool) -> NormalForm {
        NormalForm {
            terms: self.terms.iter().filter(|t| keep(&t.exp)).cloned().collect(),
        }
    }

    pub fn purely_infinite_part(&self) -> NormalForm {
        self.filter_terms(Exp::is_positive)
    }

    pub fn infinitesimal_part(&self) -> NormalForm {
        self.filter_terms(Exp::is_negative)
    }

    pub fn real_part(&self) -> Rational {
        self.terms
            .iter()
            .find(|t| t.exp.is_zero())
            .map_or_else(Rational::zero, |t| t.coef.clone())
    }

    pub fn is_purely_infinite(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_positive())
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_negative())
    }

    pub fn is_appreciable(&self) -> bool {
        self.terms.iter().all(|t| !t.exp.is_positive())
    }

    /// True when every coefficient, recursively through exponents, is dyadic.
    pub fn is_dyadic(&self) -> bool {
        self.terms.iter().all(|t| {
            rational::is_dyadic(&t.coef)
                && match &t.exp {
                    Exp::Eps(_) => true,
                    Exp::Num(x) => x.is_dyadic(),
                }
        })
    }

    pub fn max_eps_index(&self) -> Option<u32> {
        self.terms
            .iter()
            .filter_map(|t| match &t.exp {
                Exp::Eps(k) => Some(*k),
                Exp::Num(x) => x.max_eps_index(),
            })
            .max()
    }

    pub fn scale(&self, r: &Rational) -> NormalForm {
        if r.is_zero() {
            return NormalForm::zero();
        }
        NormalForm {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.clone(),
                    coef: &t.coef * r,
                })
                .collect(),
        }
    }

    pub fn abs(&self) -> NormalForm {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `self^n` for a natural `n`.
    pub fn powi(&self, n: u32) -> NormalForm {
        let mut acc = NormalForm::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact inverse of a single term `r w^a`.
    pub fn monomial_inverse(&self) -> Result<NormalForm> {
        let t = self.as_term().ok_or_else(|| {
            Error::NotExactlyRepresentable(format!("exact inverse of {self}"))
        })?;
        Ok(NormalForm::monomial(-t.exp.value(), t.coef.recip()))
    }

    pub fn arch_rel(&self, other: &NormalForm) -> Result<ArchRelation> {
        let (Some(a), Some(b)) = (self.terms.first(), other.terms.first()) else {
            return Err(Error::ZeroArgument);
        };
        Ok(match a.exp.cmp(&b.exp) {
            Ordering::Less => ArchRelation::MuchLess,
            Ordering::Equal => ArchRelation::Comparable,
            Ordering::Greater => ArchRelation::MuchGreater,
        })
    }

    pub fn arch_exponent(&self) -> Result<NormalForm> {
        self.leading_exponent().ok_or(Error::ZeroArgument)
    }

    /// Converts an ordinal (epsilon atoms included).
    pub fn from_ordinal(o: &Ordinal) -> NormalForm {
        NormalForm {
            terms: o
                .terms()
                .iter()
                .map(|t| Term {
                    exp: match &t.exp {
                        OrdExp::Eps(k) => Exp::Eps(*k),
                        OrdExp::Ord(x) => Exp::from_value(NormalForm::from_ordinal(x)),
                    },
                    coef: rational::int(t.coef as i64),
                })
                .collect(),
        }
    }

    /// `Some` when the number is an ordinal: positive integer coefficients
    /// and ordinal exponents throughout.
    pub fn to_ordinal(&self) -> Option<Ordinal> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if !t.coef.is_integer() || !t.coef.is_positive() {
                return None;
            }
            let n = t.coef.to_integer().to_u64()?;
            let e = match &t.exp {
                Exp::Eps(k) => Ordinal::eps(*k),
                Exp::Num(x) => x.to_ordinal()?,
            };
            pairs.push((e, n));
        }
        // Exponents are already strictly decreasing; natural sum rebuilds
        // the same term list.
        Ordinal::from_terms(pairs).ok()
    }

    pub fn is_ordinal(&self) -> bool {
        self.to_ordinal().is_some()
    }
}

impl Neg for &NormalForm {
    type Output = NormalForm;
    fn neg(self) -> NormalForm {
        self.scale(&-Rational::one())
    }
}

impl Neg for NormalForm {
    type Output = NormalForm;
    fn neg(self) -> NormalForm {
        -&self
    }
}

impl Add for &NormalForm {
    type Output = NormalForm;
    fn add(self, other: &NormalForm) -> NormalForm {
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
                    let coef = &self.terms[i].coef + &other.terms[j].coef;
                    if !coef.is_zero() {
                        terms.push(Term {
                            exp: self.terms[i].exp.clone(),
                            coef,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        NormalForm { terms }
    }
}

impl Sub for &NormalForm {
    type Output = NormalForm;
    fn sub(self, other: &NormalForm) -> NormalForm {
        self + &(-other)
    }
}

impl Mul for &NormalForm {
    type Output = NormalForm;
    fn mul(self, other: &NormalForm) -> NormalForm {
        let mut map: BTreeMap<Exp, Rational> = BTreeMap::new();
        for a in &self.terms {
            let av = a.exp.value();
            for b in &other.terms {
                let e = Exp::from_value(&av + &b.exp.value());
                *map.entry(e).or_insert_with(Rational::zero) += &a.coef * &b.coef;
            }
        }
        NormalForm::from_map(map)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for NormalForm {
            type Output = NormalForm;
            fn $m(self, other: NormalForm) -> NormalForm {
                (&self).$m(&other)
            }
        }
        impl $tr<&NormalForm> for NormalForm {
            type Output = NormalForm;
            fn $m(self, other: &NormalForm) -> NormalForm {
                (&self).$m(other)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl From<&Ordinal> for NormalForm {
    fn from(o: &Ordinal) -> Self {
        NormalForm::from_ordinal(o)
    }
}

fn exp_is_atomic(e: &Exp) -> bool {
    match e {
        Exp::Eps(_) => true,
        Exp::Num(x) => {
            x.as_integer().is_some_and(|n| n >= 0) || **x == NormalForm::omega() || x.as_eps().is_some()
        }
    }
}

fn fmt_monomial(e: &Exp, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Exp::Eps(k) => write!(f, "eps_{k}"),
        Exp::Num(x) if **x == NormalForm::one() => write!(f, "w"),
        e if exp_is_atomic(e) => write!(f, "w^{}", e.value()),
        e => write!(f, "w^({})", e.value()),
    }
}

impl fmt::Display for NormalForm {
    /// Re-parseable text: `w^2*3 + w*(1/2) - 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coef.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coef.abs();
            if t.exp.is_zero() {
                write!(f, "{}", rational::render(&c))?;
                continue;
            }
            fmt_monomial(&t.exp, f)?;
            if c.is_one() {
                continue;
            }
            if c.is_integer() {
                write!(f, "*{}", rational::render(&c))?;
            } else {
                write!(f, "*({})", rational::render(&c))?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for NormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<NormalForm> {
        crate::cli::parse_value(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn w() -> NormalForm {
        NormalForm::omega()
    }
    fn wp(a: NormalForm) -> NormalForm {
        NormalForm::omega_pow(a)
    }
    fn c(n: i64) -> NormalForm {
        NormalForm::int(n)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&(&w() + &c(1)) + &c(-1), w());
        let half = NormalForm::constant(frac(1, 2));
        let x = NormalForm::monomial(half.clone(), int(1));
        let y = NormalForm::monomial(half.clone(), int(2));
        assert_eq!(&x + &y, NormalForm::monomial(half, int(3)));
        let a = &wp(c(2)) + &w();
        let b = &wp(c(2)).scale(&int(-1)) + &c(5);
        assert_eq!(&a + &b, &w() + &c(5));
    }

    #[test]
    fn multiplication_examples() {
        let a = &w() + &c(1);
        let b = &w() - &c(1);
        assert_eq!(&a * &b, &wp(c(2)) - &c(1));
        let h = wp(NormalForm::constant(frac(1, 2)));
        assert_eq!(&h * &h, w());
        assert_eq!(&a * &NormalForm::zero(), NormalForm::zero());
        // w^eps_0 is eps_0 itself
        assert_eq!(wp(NormalForm::eps(0)), NormalForm::eps(0));
        assert_eq!(&NormalForm::eps(0) * &NormalForm::eps(0), wp(NormalForm::eps(0).scale(&int(2))));
    }

    #[test]
    fn order_examples() {
        assert!(w() > c(1000));
        assert!(wp(c(-1)) > NormalForm::zero());
        assert!(wp(c(-1)) < NormalForm::constant(frac(1, 1024)));
        assert!(&w() - &c(1) < w());
        assert!(NormalForm::eps(0) > wp(wp(w())));
        assert!(-&w() < c(-5));
        assert!(&NormalForm::eps(0) - &c(1) > wp(w()));
    }

    #[test]
    fn arch() {
        let x = &(&wp(c(2)).scale(&int(3)) + &w()) + &c(5);
        assert_eq!(x.arch_exponent().unwrap(), c(2));
        assert_eq!(w().arch_rel(&(&w() + &c(5))).unwrap(), ArchRelation::Comparable);
        assert_eq!(c(1).arch_rel(&wp(c(-1))).unwrap(), ArchRelation::MuchGreater);
        assert!(matches!(NormalForm::zero().arch_exponent(), Err(Error::ZeroArgument)));
    }

    #[test]
    fn ordinal_round_trip() {
        let o = Ordinal::eps(0)
            .add(&Ordinal::omega_pow(Ordinal::omega()))
            .unwrap();
        assert_eq!(NormalForm::from_ordinal(&o).to_ordinal().unwrap(), o);
        assert!(wp(c(-1)).to_ordinal().is_none());
    }

    #[test]
    fn rendering() {
        let x = &(&wp(c(2)).scale(&int(3)) + &w().scale(&frac(1, 2))) - &NormalForm::constant(frac(1, 2));
        assert_eq!(x.to_string(), "w^2*3 + w*(1/2) - 1/2");
        assert_eq!(wp(c(-1)).to_string(), "w^(-1)");
        assert_eq!(wp(wp(w())).to_string(), "w^(w^w)");
        assert_eq!((&NormalForm::eps(0) + &c(4)).to_string(), "eps_0 + 4");
        assert_eq!((-&w()).to_string(), "-w");
    }
}
