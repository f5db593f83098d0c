//! Field operations beyond the ring structure of [`NormalForm`]: exact
//! division by monomials, truncated inversion, and the genetic (Conway)
//! definitions of sum and product on finite sign sequences, used as an
//! independent oracle.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::signseq::{simplest_between, SignSeq};
use crate::surreal::NormalForm;

/// Default birthday bound for oracle inputs.
pub const DEFAULT_ORACLE_DEPTH: usize = 7;

/// Number of correction terms kept by series-based operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TruncationPolicy {
    max_terms: u32,
}

impl TruncationPolicy {
    pub fn new(max_terms: u32) -> Result<TruncationPolicy> {
        if max_terms == 0 {
            return Err(Error::Precondition("truncation order must be at least 1".into()));
        }
        Ok(TruncationPolicy { max_terms })
    }

    pub fn order(&self) -> u32 {
        self.max_terms
    }
}

/// A value together with a flag recording whether a series was cut off on
/// the way to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Approx {
    pub value: NormalForm,
    pub approximate: bool,
}

impl Approx {
    pub fn exact(value: NormalForm) -> Approx {
        Approx {
            value,
            approximate: false,
        }
    }
}

/// Splits a nonzero `x` as `r w^a (1 + delta)` with `delta` infinitesimal.
/// Returns the leading term `r w^a` and `delta`.
pub fn split_leading(x: &NormalForm) -> Result<(NormalForm, NormalForm)> {
    let lead = x.terms().first().ok_or(Error::DivisionByZero)?;
    let lead = NormalForm::term(lead.exp.clone(), lead.coef.clone());
    let delta = &(x * &lead.monomial_inverse()?) - &NormalForm::one();
    Ok((lead, delta))
}

/// `x / y` when `y` is a single term; general quotients have infinite
/// support and are refused.
pub fn div_exact(x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x * &y.monomial_inverse()?)
}

/// `sum_{k <= K} c_k t^k` evaluated exactly.
pub fn eval_series(coefs: &[crate::rational::Rational], t: &NormalForm) -> NormalForm {
    let mut acc = NormalForm::zero();
    let mut power = NormalForm::one();
    for (k, c) in coefs.iter().enumerate() {
        if k > 0 {
            power = &power * t;
        }
        if !c.is_zero() {
            acc = &acc + &power.scale(c);
        }
    }
    acc
}

/// Inverse of `x` up to order `K`: `r^-1 w^-a sum_{k<=K} (-delta)^k`.
/// `x * result - 1` is `(-1)^K delta^(K+1)`, so its leading exponent is
/// `(K+1) e` where `e < 0` leads `delta`.
pub fn inv_truncated(x: &NormalForm, policy: TruncationPolicy) -> Result<Approx> {
    let (lead, delta) = split_leading(x)?;
    let inv_lead = lead.monomial_inverse()?;
    if delta.is_zero() {
        return Ok(Approx::exact(inv_lead));
    }
    let coefs: Vec<_> = (0..=policy.order())
        .map(|_| crate::rational::Rational::one())
        .collect();
    let series = eval_series(&coefs, &-&delta);
    Ok(Approx {
        value: &inv_lead * &series,
        approximate: true,
    })
}

/// Memoised genetic arithmetic on finite sign sequences.
///
/// Options are the canonical ones: the left options of `x` are its proper
/// prefixes below `x`, the right options its proper prefixes above `x`.
pub struct ConwayOracle {
    bound: usize,
    sums: HashMap<(SignSeq, SignSeq), SignSeq>,
    products: HashMap<(SignSeq, SignSeq), SignSeq>,
}

fn options(x: &SignSeq) -> (Vec<SignSeq>, Vec<SignSeq>) {
    let bits = x.to_bools().expect("oracle inputs are finite");
    let mut left = Vec::new();
    let mut right = Vec::new();
    for k in 0..bits.len() {
        // the prefix of length k lies below x iff the next sign of x is +
        let p = SignSeq::from_bools(&bits[..k]);
        if bits[k] {
            left.push(p);
        } else {
            right.push(p);
        }
    }
    (left, right)
}

impl ConwayOracle {
    pub fn new(bound: usize) -> ConwayOracle {
        ConwayOracle {
            bound,
            sums: HashMap::new(),
            products: HashMap::new(),
        }
    }

    fn check(&self, x: &SignSeq) -> Result<()> {
        let birthday = x
            .to_bools()
            .ok_or(Error::UnsupportedTransfiniteParse)?
            .len();
        if birthday > self.bound {
            return Err(Error::InputTooDeep {
                birthday,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// `x + y = ⟨x' + y, x + y' | x'' + y, x + y''⟩`.
    pub fn add(&mut self, x: &SignSeq, y: &SignSeq) -> Result<SignSeq> {
        self.check(x)?;
        self.check(y)?;
        self.add_rec(x, y)
    }

    /// `xy` by the four option families of the product.
    pub fn mul(&mut self, x: &SignSeq, y: &SignSeq) -> Result<SignSeq> {
        self.check(x)?;
        self.check(y)?;
        self.mul_rec(x, y)
    }

    fn add_rec(&mut self, x: &SignSeq, y: &SignSeq) -> Result<SignSeq> {
        // the sum is commutative, so one memo entry serves both orders
        let key = if x <= y {
            (x.clone(), y.clone())
        } else {
            (y.clone(), x.clone())
        };
        if let Some(z) = self.sums.get(&key) {
            return Ok(z.clone());
        }
        let (xl, xr) = options(x);
        let (yl, yr) = options(y);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for a in &xl {
            left.push(self.add_rec(a, y)?);
        }
        for b in &yl {
            left.push(self.add_rec(x, b)?);
        }
        for a in &xr {
            right.push(self.add_rec(a, y)?);
        }
        for b in &yr {
            right.push(self.add_rec(x, b)?);
        }
        let z = simplest_between(&left, &right)?;
        self.sums.insert(key, z.clone());
        Ok(z)
    }

    fn sub_rec(&mut self, x: &SignSeq, y: &SignSeq) -> Result<SignSeq> {
        self.add_rec(x, &y.negate())
    }

    /// `x'y + xy' - x'y'` for one choice of options.
    fn product_option(
        &mut self,
        x: &SignSeq,
        y: &SignSeq,
        xo: &SignSeq,
        yo: &SignSeq,
    ) -> Result<SignSeq> {
        let a = self.mul_rec(xo, y)?;
        let b = self.mul_rec(x, yo)?;
        let c = self.mul_rec(xo, yo)?;
        let ab = self.add_rec(&a, &b)?;
        self.sub_rec(&ab, &c)
    }

    fn mul_rec(&mut self, x: &SignSeq, y: &SignSeq) -> Result<SignSeq> {
        let key = if x <= y {
            (x.clone(), y.clone())
        } else {
            (y.clone(), x.clone())
        };
        if let Some(z) = self.products.get(&key) {
            return Ok(z.clone());
        }
        let (xl, xr) = options(x);
        let (yl, yr) = options(y);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for a in &xl {
            for b in &yl {
                left.push(self.product_option(x, y, a, b)?);
            }
            for b in &yr {
                right.push(self.product_option(x, y, a, b)?);
            }
        }
        for a in &xr {
            for b in &yr {
                left.push(self.product_option(x, y, a, b)?);
            }
            for b in &yl {
                right.push(self.product_option(x, y, a, b)?);
            }
        }
        let z = simplest_between(&left, &right)?;
        self.products.insert(key, z.clone());
        Ok(z)
    }
}

/// One-shot genetic sum with the given birthday bound.
pub fn conway_add(x: &SignSeq, y: &SignSeq, bound: usize) -> Result<SignSeq> {
    ConwayOracle::new(bound).add(x, y)
}

/// One-shot genetic product with the given birthday bound.
pub fn conway_mul(x: &SignSeq, y: &SignSeq, bound: usize) -> Result<SignSeq> {
    ConwayOracle::new(bound).mul(x, y)
}
