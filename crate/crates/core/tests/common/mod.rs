#![allow(dead_code)]

use proptest::prelude::*;
use salem_core::{ratio, Digit, DigitSeq, FlipSet, ProbVector, Rational, Tail};

/// Probability vectors with `q ∈ 2..=5` and integer weights `1..=20`.
pub fn prob_vector() -> impl Strategy<Value = ProbVector> {
    prop::collection::vec(1i64..=20, 2..=5).prop_map(|w| {
        let total: i64 = w.iter().sum();
        ProbVector::new(w.iter().map(|&n| ratio(n, total)).collect()).unwrap()
    })
}

pub fn digits(
    q: u32,
    len: impl Into<prop::collection::SizeRange>,
) -> impl Strategy<Value = Vec<Digit>> {
    prop::collection::vec(0..q, len)
}

pub fn tail(q: u32) -> impl Strategy<Value = Tail> {
    prop_oneof![
        Just(Tail::Zero),
        Just(Tail::Max),
        digits(q, 1..4).prop_map(Tail::Periodic),
    ]
}

pub fn digit_seq(q: u32) -> impl Strategy<Value = DigitSeq> {
    (digits(q, 0..10), tail(q)).prop_map(move |(p, t)| DigitSeq::new(q, p, t).unwrap())
}

pub fn pv_and_seq() -> impl Strategy<Value = (ProbVector, DigitSeq)> {
    prob_vector().prop_flat_map(|pv| {
        let q = pv.q();
        (Just(pv), digit_seq(q))
    })
}

pub fn flip_set() -> impl Strategy<Value = FlipSet> {
    prop_oneof![
        Just(FlipSet::none()),
        Just(FlipSet::all()),
        prop::collection::vec(1usize..12, 1..4).prop_map(|v| FlipSet::finite(v).unwrap()),
        (
            prop::collection::vec(any::<bool>(), 0..4),
            prop::collection::vec(any::<bool>(), 1..4)
        )
            .prop_map(|(pre, per)| FlipSet::mask(pre, per).unwrap()),
    ]
}

pub fn pow(x: &Rational, n: usize) -> Rational {
    num_traits::Pow::pow(x.clone(), n)
}
