//! Test-side helpers: independent reference implementations and shared
//! sample corpora. Nothing here calls into the kernel's own conversion or
//! ordinal code, so agreement with the kernel is evidence, not tautology.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use surreal_kernel::NormalForm;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nf(s: &str) -> NormalForm {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Value of a finite sign sequence: the leading run of equal signs walks
/// through the integers, after the first change every sign moves by half
/// of the previous step.
pub fn dyadic_of_signs(signs: &[bool]) -> BigRational {
    let mut value = BigRational::zero();
    let mut step = BigRational::one();
    let mut halving = false;
    for (i, &s) in signs.iter().enumerate() {
        if i > 0 && s != signs[i - 1] {
            halving = true;
        }
        if halving {
            step = step / BigRational::from_integer(BigInt::from(2));
        }
        if s {
            value += &step;
        } else {
            value -= &step;
        }
    }
    value
}

/// All sign sequences (as bool vectors) of length at most `n`.
pub fn all_signs(n: usize) -> Vec<Vec<bool>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &layer {
            for b in [false, true] {
                let mut t: Vec<bool> = s.clone();
                t.push(b);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Shortest sign sequence of length at most `depth` strictly between
/// every left value and every right value, by exhaustive search.
pub fn simplest_brute(left: &[BigRational], right: &[BigRational], depth: usize) -> Option<Vec<bool>> {
    all_signs(depth).into_iter().find(|s| {
        let v = dyadic_of_signs(s);
        left.iter().all(|l| *l < v) && right.iter().all(|r| v < *r)
    })
}

/// Ordinals below `w^w` as coefficient vectors indexed by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallOrd(pub Vec<u64>);

impl SmallOrd {
    pub fn trim(mut self) -> SmallOrd {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn deg(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    pub fn cmp(&self, o: &SmallOrd) -> Ordering {
        let n = self.0.len().max(o.0.len());
        for i in (0..n).rev() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = o.0.get(i).copied().unwrap_or(0);
            if a != b {
                return a.cmp(&b);
            }
        }
        Ordering::Equal
    }

    /// Ordinal sum: the terms of `self` below the leading exponent of `o`
    /// are absorbed.
    pub fn add(&self, o: &SmallOrd) -> SmallOrd {
        let Some(d) = o.deg() else {
            return self.clone().trim();
        };
        let n = self.0.len().max(o.0.len());
        let out = (0..n)
            .map(|i| {
                let mine = if i >= d { self.0.get(i).copied().unwrap_or(0) } else { 0 };
                mine + o.0.get(i).copied().unwrap_or(0)
            })
            .collect();
        SmallOrd(out).trim()
    }

    pub fn nat_add(&self, o: &SmallOrd) -> SmallOrd {
        let mut out = vec![0; self.0.len().max(o.0.len())];
        for (i, c) in out.iter_mut().enumerate() {
            *c = self.0.get(i).copied().unwrap_or(0) + o.0.get(i).copied().unwrap_or(0);
        }
        SmallOrd(out).trim()
    }

    /// Ordinal product, distributing on the right over the terms of `o`:
    /// `self * w^e = w^(deg + e)` for `e > 0`, `self * n` multiplies the
    /// leading coefficient only.
    pub fn mul(&self, o: &SmallOrd) -> SmallOrd {
        let Some(d) = self.deg() else {
            return SmallOrd(vec![]);
        };
        let mut acc = SmallOrd(vec![]);
        for e in (0..o.0.len()).rev() {
            let c = o.0[e];
            if c == 0 {
                continue;
            }
            let part = if e == 0 {
                let mut v = self.0.clone();
                v[d] *= c;
                SmallOrd(v)
            } else {
                let mut v = vec![0; d + e + 1];
                v[d + e] = c;
                SmallOrd(v)
            };
            acc = acc.add(&part);
        }
        acc.trim()
    }

    pub fn nat_mul(&self, o: &SmallOrd) -> SmallOrd {
        let mut out = vec![0; self.0.len() + o.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SmallOrd(out).trim()
    }

    /// Kernel syntax, e.g. `w^2*3 + w + 4`.
    pub fn text(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 => format!("w*{c}"),
                _ => format!("w^{i}*{c}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// A random ordinal below `w^4` with small coefficients.
pub fn small_ord(r: &mut impl Rng) -> SmallOrd {
    SmallOrd((0..r.gen_range(0..=4)).map(|_| r.gen_range(0..4)).collect()).trim()
}

/// Positive sample inputs for `g` covering every closed-form branch, the
/// bracket recursion, and some unsupported inputs.
pub fn g_candidates() -> Vec<NormalForm> {
    let mut out = Vec::new();
    for k in 1..=24 {
        for d in [1, 2, 4, 8] {
            out.push(NormalForm::constant(surreal_kernel::rational::frac(k, d)));
        }
    }
    for s in [
        "w", "w + 1", "w*2", "w^2", "w^2*3 + w + 5", "w^w", "w^w + w", "w^(w^2) + 3", "eps_0",
        "eps_0 + 1", "eps_0 + 5", "eps_0 + 1/2", "eps_0 + 3/4", "eps_1 + 2", "eps_0*2",
        "w^(eps_0 + 1)", "w^(-1)", "w^(-2)", "w^(-w)", "w^(-w - 1)", "w^(-1)/2", "w^(-1)/4",
        "w^(-2)*(3/4)", "w^(-3)/8", "w^(-w)/2", "w^(-(w^2))/4", "w^(-2)*(1/2)",
        "w^(-1)*(3/8)", "w^(w^(-1))", "w^(1/2)", "w^(-1/2)", "eps_0 + w^(1/2)",
        "eps_0 + w^(-1)", "w^(w^(-1)) + 1",
    ] {
        out.push(nf(s));
    }
    out
}

/// Sample inputs for `h`, of both signs.
pub fn h_candidates() -> Vec<NormalForm> {
    let mut out = Vec::new();
    for k in -12..=12 {
        for d in [1, 2, 4] {
            out.push(NormalForm::constant(surreal_kernel::rational::frac(k, d)));
        }
    }
    for s in [
        "-w", "-w - 1", "-w*2", "-(w^2)", "-(w^w)", "-eps_0", "w", "w + 3", "w^w", "eps_0 + 1",
        "eps_0 + 2", "eps_0 + 3/2", "eps_0 + 5/4", "-w + 1/2", "-w - 3/4", "-(w^2) + 1/4",
        "w^(w^(-1))", "w^(-1/2)", "-w^(w^(-1))",
    ] {
        out.push(nf(s));
    }
    out
}

/// Positive exponents whose `g` is supported, for building purely
/// infinite numbers.
pub fn exponent_pool() -> Vec<NormalForm> {
    [
        "1", "2", "3", "1/2", "3/4", "5/4", "3/2", "w", "w + 1", "w^2", "w*2 + 1", "eps_0",
        "eps_0 + 1", "eps_0 + 1/2", "w^(-1)", "w^(-2)/2", "w^(w^(-1))",
    ]
    .iter()
    .map(|s| nf(s))
    .collect()
}

/// A random purely infinite number with 1-3 terms over `pool`.
pub fn purely_infinite(r: &mut impl Rng, pool: &[NormalForm]) -> NormalForm {
    let n = r.gen_range(1..=3);
    let mut terms = Vec::new();
    for _ in 0..n {
        let a = pool[r.gen_range(0..pool.len())].clone();
        let mut c = surreal_kernel::rational::frac(r.gen_range(1..=8), 1 << r.gen_range(0..3));
        if r.gen_bool(0.3) {
            c = -c;
        }
        terms.push((a, c));
    }
    let x = NormalForm::from_terms(terms);
    if x.is_zero() {
        NormalForm::omega()
    } else {
        x
    }
}
