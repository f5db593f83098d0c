//! Run-length encoded sign sequences of ordinal length.
//!
//! A surreal number is a map from an ordinal to `{-, +}`. Runs of equal
//! signs are stored as `(sign, count)` pairs; counts are positive ordinals
//! and adjacent runs alternate, so the encoding is canonical.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn from_bool(plus: bool) -> Sign {
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignSeq {
    runs: Vec<(Sign, Ordinal)>,
}

/// Rank of the symbol at a position, in the order `- < blank < +`.
fn symbol_rank(s: Option<Sign>) -> u8 {
    match s {
        Some(Sign::Minus) => 0,
        None => 1,
        Some(Sign::Plus) => 2,
    }
}

impl SignSeq {
    pub fn empty() -> SignSeq {
        SignSeq { runs: Vec::new() }
    }

    /// A single run `sign^count` (empty when `count` is zero).
    pub fn run(sign: Sign, count: Ordinal) -> SignSeq {
        let mut s = SignSeq::empty();
        s.push(sign, count);
        s
    }

    pub fn from_runs(runs: impl IntoIterator<Item = (Sign, Ordinal)>) -> SignSeq {
        let mut s = SignSeq::empty();
        for (sign, count) in runs {
            s.push(sign, count);
        }
        s
    }

    pub fn from_bools(signs: &[bool]) -> SignSeq {
        SignSeq::from_runs(
            signs
                .iter()
                .map(|&b| (Sign::from_bool(b), Ordinal::one())),
        )
    }

    pub fn runs(&self) -> &[(Sign, Ordinal)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Appends `count` copies of `sign`, merging with the last run.
    pub fn push(&mut self, sign: Sign, count: Ordinal) {
        if count.is_zero() {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == sign {
                last.1 = last
                    .1
                    .add(&count)
                    .expect("sum of run counts stays below the length bound");
                return;
            }
        }
        self.runs.push((sign, count));
    }

    /// Juxtaposition `self` followed by `other`.
    pub fn concat(&self, other: &SignSeq) -> SignSeq {
        let mut out = self.clone();
        for (s, c) in &other.runs {
            out.push(*s, c.clone());
        }
        out
    }

    /// Ordinal length: ordered sum of the run counts.
    pub fn length(&self) -> Result<Ordinal> {
        self.runs
            .iter()
            .try_fold(Ordinal::zero(), |acc, (_, c)| acc.add(c))
    }

    /// `|x|_+`: ordered sum of the counts of the plus runs.
    pub fn plus_count(&self) -> Result<Ordinal> {
        self.runs
            .iter()
            .filter(|(s, _)| *s == Sign::Plus)
            .try_fold(Ordinal::zero(), |acc, (_, c)| acc.add(c))
    }

    pub fn is_finite(&self) -> bool {
        self.runs.iter().all(|(_, c)| c.is_finite())
    }

    /// Finite sequences as a flat list, `true` for `+`.
    pub fn to_bools(&self) -> Option<Vec<bool>> {
        let mut out = Vec::new();
        for (s, c) in &self.runs {
            let n = c.as_u64()?;
            out.extend(std::iter::repeat(*s == Sign::Plus).take(n as usize));
        }
        Some(out)
    }

    pub fn negate(&self) -> SignSeq {
        SignSeq {
            runs: self.runs.iter().map(|(s, c)| (s.flip(), c.clone())).collect(),
        }
    }

    /// Sign at ordinal position `pos`, `None` past the end.
    pub fn sign_at(&self, pos: &Ordinal) -> Option<Sign> {
        let mut start = Ordinal::zero();
        for (s, c) in &self.runs {
            let offset = start.left_sub(pos)?;
            if offset < *c {
                return Some(*s);
            }
            start = start.add(c).ok()?;
        }
        None
    }

    /// The first `len` signs.
    pub fn prefix(&self, len: &Ordinal) -> SignSeq {
        let mut out = SignSeq::empty();
        let mut start = Ordinal::zero();
        for (s, c) in &self.runs {
            let Some(room) = start.left_sub(len) else {
                break;
            };
            if room.is_zero() {
                break;
            }
            if room <= *c {
                out.push(*s, room);
                break;
            }
            out.push(*s, c.clone());
            start = start.add(c).expect("prefix of a valid sequence");
        }
        out
    }

    /// The signs from position `from` on.
    pub fn suffix(&self, from: &Ordinal) -> SignSeq {
        let mut out = SignSeq::empty();
        let mut start = Ordinal::zero();
        for (s, c) in &self.runs {
            let end = start.add(c).expect("suffix of a valid sequence");
            match from.left_sub(&end) {
                // the run ends at or before `from`
                None => {}
                Some(_) if end == *from => {}
                Some(_) => match start.left_sub(from) {
                    Some(skip) => {
                        let rest = skip.left_sub(c).expect("skip lies inside the run");
                        out.push(*s, rest);
                    }
                    None => out.push(*s, c.clone()),
                },
            }
            start = end;
        }
        out
    }

    /// Length of the longest common prefix.
    pub fn lcp(&self, other: &SignSeq) -> Ordinal {
        let mut acc = Ordinal::zero();
        for (a, b) in self.runs.iter().zip(&other.runs) {
            if a.0 != b.0 {
                break;
            }
            if a.1 == b.1 {
                acc = acc.add(&a.1).expect("common prefix of valid sequences");
                continue;
            }
            let m = if a.1 < b.1 { &a.1 } else { &b.1 };
            acc = acc.add(m).expect("common prefix of valid sequences");
            break;
        }
        acc
    }

    /// `self ⊑ other`.
    pub fn is_prefix_of(&self, other: &SignSeq) -> bool {
        match self.length() {
            Ok(l) => other.prefix(&l) == *self,
            Err(_) => false,
        }
    }

    /// Position of the first sign equal to `sign`, if any.
    fn first(&self, sign: Sign) -> Option<Ordinal> {
        let mut start = Ordinal::zero();
        for (s, c) in &self.runs {
            if *s == sign {
                return Some(start);
            }
            start = start.add(c).ok()?;
        }
        None
    }

    /// Sequences consisting of `sign` only (the empty sequence included).
    fn uniform(&self, sign: Sign) -> bool {
        self.runs.iter().all(|(s, _)| *s == sign)
    }
}

impl Ord for SignSeq {
    /// Lexicographic order with `- < blank < +`.
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let l = self.lcp(other);
        symbol_rank(self.sign_at(&l)).cmp(&symbol_rank(other.sign_at(&l)))
    }
}

impl PartialOrd for SignSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Simplest `z` strictly above `a` (`a` is the maximum of the left set).
fn simplest_above(a: &SignSeq) -> Result<SignSeq> {
    if a.uniform(Sign::Plus) {
        return Ok(SignSeq::run(Sign::Plus, a.length()?.add(&Ordinal::one())?));
    }
    let q = a.first(Sign::Minus).expect("a non-uniform sequence has a minus");
    Ok(SignSeq::run(Sign::Plus, q))
}

/// `c` followed by `s`, then the shortest tail that passes `t` on the
/// opposite side, where `t` is what follows `c s` in the bound.
fn extend_towards(c: &SignSeq, s: Sign, t: &SignSeq) -> Result<SignSeq> {
    let mut z = c.clone();
    z.push(s, Ordinal::one());
    let back = s.flip();
    match t.runs.first() {
        // `c s` is already strictly inside
        Some((first, _)) if *first == s => {}
        Some((_, k)) if t.runs.len() > 1 => z.push(back, k.clone()),
        Some((_, k)) => z.push(back, k.add(&Ordinal::one())?),
        None => z.push(back, Ordinal::one()),
    }
    Ok(z)
}

/// `⟨A | B⟩`: the simplest sequence strictly between every element of `a`
/// and every element of `b`.
pub fn simplest_between(a: &[SignSeq], b: &[SignSeq]) -> Result<SignSeq> {
    let lo = a.iter().max();
    let hi = b.iter().min();
    match (lo, hi) {
        (None, None) => Ok(SignSeq::empty()),
        (Some(lo), None) => simplest_above(lo),
        (None, Some(hi)) => Ok(simplest_above(&hi.negate())?.negate()),
        (Some(lo), Some(hi)) => {
            if lo >= hi {
                return Err(Error::InvalidCut(format!("{lo} is not below {hi}")));
            }
            let l = lo.lcp(hi);
            let c = lo.prefix(&l);
            let next = l.add(&Ordinal::one())?;
            match (lo.sign_at(&l), hi.sign_at(&l)) {
                (Some(Sign::Minus), Some(Sign::Plus)) => Ok(c),
                (None, Some(Sign::Plus)) => extend_towards(&c, Sign::Plus, &hi.suffix(&next)),
                (Some(Sign::Minus), None) => extend_towards(&c, Sign::Minus, &lo.suffix(&next)),
                _ => Err(Error::Internal(format!("ordered pair {lo} < {hi} with no split"))),
            }
        }
    }
}

impl fmt::Display for SignSeq {
    /// `+^1 -^w +^3`; the empty sequence is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "()");
        }
        for (i, (s, c)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if c.terms().len() > 1 {
                write!(f, "{}^({c})", s.symbol())?;
            } else {
                write!(f, "{}^{c}", s.symbol())?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for SignSeq {
    type Err = Error;

    /// Parses the run syntax. A run is `+` or `-`, optionally followed by
    /// `^count` where the count is ordinal text (parenthesised when it
    /// contains spaces).
    fn from_str(s: &str) -> Result<SignSeq> {
        let text = s.trim();
        if text == "()" || text.is_empty() {
            return Ok(SignSeq::empty());
        }
        let bytes = text.as_bytes();
        let mut out = SignSeq::empty();
        let mut i = 0;
        while i < bytes.len() {
            let sign = match bytes[i] {
                b' ' | b'\t' => {
                    i += 1;
                    continue;
                }
                b'+' => Sign::Plus,
                b'-' => Sign::Minus,
                _ => {
                    return Err(Error::Syntax {
                        position: i + 1,
                        expected: "'+' or '-'".into(),
                    })
                }
            };
            i += 1;
            if bytes.get(i) != Some(&b'^') {
                out.push(sign, Ordinal::one());
                continue;
            }
            i += 1;
            let start = i;
            let mut depth = 0usize;
            while i < bytes.len() {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => depth = depth.saturating_sub(1),
                    b' ' | b'\t' if depth == 0 => break,
                    _ => {}
                }
                i += 1;
            }
            let count: Ordinal = text[start..i].parse().map_err(|e| match e {
                Error::Syntax { position, expected } => Error::Syntax {
                    position: position + start,
                    expected,
                },
                e => e,
            })?;
            if count.is_zero() {
                return Err(Error::Syntax {
                    position: start + 1,
                    expected: "a positive run count".into(),
                });
            }
            out.push(sign, count);
        }
        Ok(out)
    }
}

/// All sign sequences of length at most `n`, shortest first.
pub fn enumerate_finite(n: usize) -> Vec<SignSeq> {
    let mut out = vec![SignSeq::empty()];
    let mut layer = vec![Vec::<bool>::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for s in &layer {
            for b in [false, true] {
                let mut t = s.clone();
                t.push(b);
                next.push(t);
            }
        }
        out.extend(next.iter().map(|s| SignSeq::from_bools(s)));
        layer = next;
    }
    out
}
