//! Kernel results against the independent reference implementations in
//! `common`.

mod common;

use common::*;
use surreal_kernel::convert::{nf_to_signseq, signseq_to_nf};
use surreal_kernel::signseq::{enumerate_finite, simplest_between};
use surreal_kernel::{NormalForm, Ordinal, SignSeq};

fn value_of(s: &SignSeq) -> num_rational::BigRational {
    dyadic_of_signs(&s.to_bools().expect("finite"))
}

#[test]
fn finite_sign_sequences_match_the_reference_value() {
    for s in enumerate_finite(10) {
        let x = signseq_to_nf(&s).unwrap();
        assert_eq!(x, NormalForm::constant(value_of(&s)), "{s}");
        assert_eq!(nf_to_signseq(&x).unwrap(), s);
    }
}

#[test]
fn simplest_between_matches_brute_force_to_birthday_6() {
    let seqs = enumerate_finite(4);
    let mut checked = 0;
    for a in &seqs {
        for b in &seqs {
            let (va, vb) = (value_of(a), value_of(b));
            if va >= vb {
                continue;
            }
            let got = simplest_between(&[a.clone()], &[b.clone()]).unwrap();
            let want = simplest_brute(&[va.clone()], &[vb.clone()], 6).expect("finite cut");
            assert_eq!(got.to_bools().unwrap(), want, "between {a} and {b}");
            checked += 1;
        }
    }
    // one-sided and empty cuts
    for a in &seqs {
        let va = value_of(a);
        let up = simplest_between(&[a.clone()], &[]).unwrap();
        assert_eq!(up.to_bools().unwrap(), simplest_brute(&[va.clone()], &[], 6).unwrap());
        let down = simplest_between(&[], &[a.clone()]).unwrap();
        assert_eq!(down.to_bools().unwrap(), simplest_brute(&[], &[va], 6).unwrap());
    }
    assert!(simplest_between(&[], &[]).unwrap().is_empty());
    assert!(checked > 200);
}

#[test]
fn simplest_between_with_several_options() {
    let seqs = enumerate_finite(3);
    let mut r = rng(11);
    use rand::seq::SliceRandom;
    for _ in 0..300 {
        let mut pick: Vec<SignSeq> = seqs.choose_multiple(&mut r, 4).cloned().collect();
        pick.sort_by_key(value_of);
        let (left, right) = pick.split_at(2);
        if value_of(&left[1]) >= value_of(&right[0]) {
            continue;
        }
        let got = simplest_between(left, right).unwrap();
        let lv: Vec<_> = left.iter().map(value_of).collect();
        let rv: Vec<_> = right.iter().map(value_of).collect();
        assert_eq!(got.to_bools().unwrap(), simplest_brute(&lv, &rv, 6).unwrap());
    }
}

#[test]
fn invalid_cut_is_refused() {
    let one: SignSeq = "+^1".parse().unwrap();
    let half: SignSeq = "+^1 -^1".parse().unwrap();
    assert!(simplest_between(&[one], &[half]).is_err());
}

fn ord(o: &SmallOrd) -> Ordinal {
    o.text().parse().unwrap()
}

#[test]
fn ordinal_arithmetic_matches_reference_below_w_to_the_w() {
    let mut r = rng(3);
    for _ in 0..2000 {
        let (a, b) = (small_ord(&mut r), small_ord(&mut r));
        let (oa, ob) = (ord(&a), ord(&b));
        assert_eq!(oa.cmp(&ob), a.cmp(&b), "{} vs {}", a.text(), b.text());
        assert_eq!(oa.add(&ob).unwrap(), ord(&a.add(&b)), "{} + {}", a.text(), b.text());
        assert_eq!(oa.mul(&ob).unwrap(), ord(&a.mul(&b)), "{} * {}", a.text(), b.text());
        assert_eq!(oa.nat_add(&ob).unwrap(), ord(&a.nat_add(&b)));
        assert_eq!(oa.nat_mul(&ob).unwrap(), ord(&a.nat_mul(&b)));
    }
}

#[test]
fn ordinal_powers_of_omega_and_finite_powers() {
    let w = Ordinal::omega();
    for (base, exp, want) in [
        ("w", "2", "w^2"),
        ("w + 1", "2", "w^2 + w + 1"),
        ("2", "w", "w"),
        ("2", "w + 1", "w*2"),
        ("w", "w", "w^w"),
        ("w*2", "2", "w^2*2"),
        ("3", "2", "9"),
    ] {
        let b: Ordinal = base.parse().unwrap();
        let e: Ordinal = exp.parse().unwrap();
        assert_eq!(b.pow(&e).unwrap(), want.parse().unwrap(), "{base}^{exp}");
    }
    assert_eq!(w.pow(&Ordinal::eps(0)).unwrap(), Ordinal::eps(0));
}
