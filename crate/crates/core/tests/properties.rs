//! Property-based invariants: ring axioms, order, conversions, round
//! trips, g/h inversion and exp/ln homomorphism.

mod common;

use proptest::prelude::*;

use surreal_kernel::cli::value::{parse_number, render, Format, Value};
use surreal_kernel::convert::{length_of, nf_to_signseq, signseq_to_nf};
use surreal_kernel::explog::{exp, ln, EvalMode};
use surreal_kernel::field::conway_add;
use surreal_kernel::field::conway_mul;
use surreal_kernel::gonshor::{g, h};
use surreal_kernel::rational::frac;
use surreal_kernel::signseq::{enumerate_finite, simplest_between};
use surreal_kernel::{NormalForm, Ordinal, SignSeq};

const EXPONENTS: &[&str] = &[
    "0", "1", "2", "-1", "-2", "1/2", "-1/2", "3/4", "w", "-w", "w^(-1)", "w + 1", "eps_0",
    "w^(1/2)",
];

fn exponent() -> impl Strategy<Value = NormalForm> {
    proptest::sample::select(EXPONENTS).prop_map(common::nf)
}

fn dyadic() -> impl Strategy<Value = num_rational::BigRational> {
    (-40i64..=40, 0u32..4).prop_filter_map("nonzero", |(p, k)| {
        (p != 0).then(|| frac(p, 1 << k))
    })
}

fn rational() -> impl Strategy<Value = num_rational::BigRational> {
    (-20i64..=20, 1i64..7).prop_filter_map("nonzero", |(p, d)| (p != 0).then(|| frac(p, d)))
}

fn number_with(coef: impl Strategy<Value = num_rational::BigRational>) -> impl Strategy<Value = NormalForm> {
    proptest::collection::vec((exponent(), coef), 0..4).prop_map(NormalForm::from_terms)
}

fn number() -> impl Strategy<Value = NormalForm> {
    number_with(rational())
}

fn dyadic_number() -> impl Strategy<Value = NormalForm> {
    number_with(dyadic())
}

fn small_ordinal() -> impl Strategy<Value = Ordinal> {
    proptest::collection::vec(0u64..4, 0..4).prop_map(|v| common::SmallOrd(v).trim().text().parse().unwrap())
}

fn finite_seq() -> impl Strategy<Value = SignSeq> {
    proptest::collection::vec(any::<bool>(), 0..7).prop_map(|b| SignSeq::from_bools(&b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(x in number(), y in number(), z in number()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &NormalForm::one(), x.clone());
    }

    #[test]
    fn order_is_compatible_with_the_field(x in number(), y in number(), z in number()) {
        prop_assert_eq!(x < y, (&y - &x).is_positive());
        prop_assert_eq!(x < y, &x + &z < &y + &z);
        if z.is_positive() {
            prop_assert_eq!(x < y, &x * &z < &y * &z);
        }
    }

    #[test]
    fn sign_expansion_preserves_order(x in dyadic_number(), y in dyadic_number()) {
        let (sx, sy) = (nf_to_signseq(&x).unwrap(), nf_to_signseq(&y).unwrap());
        prop_assert_eq!(x.cmp(&y), sx.cmp(&sy));
        prop_assert_eq!(sx.negate(), nf_to_signseq(&-&x).unwrap());
    }

    #[test]
    fn sign_expansion_text_round_trips(x in dyadic_number()) {
        let s = nf_to_signseq(&x).unwrap();
        let back: SignSeq = s.to_string().parse().unwrap();
        prop_assert_eq!(back.clone(), s.clone());
        prop_assert_eq!(s.length().unwrap(), length_of(&x).unwrap());
        if s.is_finite() {
            prop_assert_eq!(signseq_to_nf(&s).unwrap(), x);
        }
    }

    #[test]
    fn rendered_numbers_round_trip(x in number(), approx in any::<bool>()) {
        let v = Value::Num { value: x, approximate: approx };
        for f in [Format::Text, Format::Json] {
            let r = render(&v, f).unwrap();
            let back = parse_number(&r, f).unwrap();
            prop_assert_eq!(&back, &v);
            prop_assert_eq!(render(&back, f).unwrap(), r);
        }
    }

    #[test]
    fn omega_map_length_bounds(a in dyadic_number()) {
        let la = length_of(&a).unwrap();
        let lw = length_of(&NormalForm::omega_pow(a.clone())).unwrap();
        prop_assert!(la <= lw, "l(a) = {la}, l(w^a) = {lw}");
        prop_assert!(lw <= Ordinal::omega_pow(la.clone()), "l(w^a) = {lw}, w^l(a) = {}", Ordinal::omega_pow(la.clone()));
    }

    #[test]
    fn g_and_h_are_inverse_on_dyadics(p in -64i64..=64, k in 0u32..4) {
        let b = NormalForm::constant(frac(p, 1 << k));
        let hb = h(&b).unwrap();
        prop_assert_eq!(g(&hb).unwrap(), b.clone());
        if b.is_positive() {
            let gb = g(&b).unwrap();
            prop_assert_eq!(h(&gb).unwrap(), b);
        }
    }

    #[test]
    fn exp_is_a_homomorphism_on_purely_infinite(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let pool = common::exponent_pool();
        let x = common::purely_infinite(&mut r, &pool);
        let y = common::purely_infinite(&mut r, &pool);
        let e = |v: &NormalForm| exp(v, EvalMode::Exact).unwrap().value;
        prop_assert_eq!(e(&(&x + &y)), &e(&x) * &e(&y));
        prop_assert_eq!(ln(&e(&x), EvalMode::Exact).unwrap().value, x.clone());
        if x < y {
            prop_assert!(e(&x) < e(&y));
        }
    }

    #[test]
    fn ordinal_sums(a in small_ordinal(), b in small_ordinal(), c in small_ordinal()) {
        prop_assert_eq!(a.nat_add(&b).unwrap(), b.nat_add(&a).unwrap());
        prop_assert_eq!(a.nat_add(&b).unwrap().nat_add(&c).unwrap(), a.nat_add(&b.nat_add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.add(&b).unwrap() <= a.nat_add(&b).unwrap());
    }

    #[test]
    fn simplest_is_a_prefix_of_every_witness(a in finite_seq(), b in finite_seq()) {
        prop_assume!(a < b);
        let s = simplest_between(&[a.clone()], &[b.clone()]).unwrap();
        for w in enumerate_finite(6) {
            if a < w && w < b {
                prop_assert!(s.is_prefix_of(&w), "{s} not a prefix of {w}");
            }
        }
    }

    #[test]
    fn conway_recursion_agrees_with_normal_forms(a in finite_seq(), b in finite_seq()) {
        let (x, y) = (signseq_to_nf(&a).unwrap(), signseq_to_nf(&b).unwrap());
        prop_assert_eq!(signseq_to_nf(&conway_add(&a, &b, 6).unwrap()).unwrap(), &x + &y);
        prop_assert_eq!(signseq_to_nf(&conway_mul(&a, &b, 6).unwrap()).unwrap(), &x * &y);
    }
}

#[test]
fn ordinal_addition_is_not_commutative() {
    let (one, w) = (Ordinal::one(), Ordinal::omega());
    assert_ne!(one.add(&w).unwrap(), w.add(&one).unwrap());
}
