mod common;

use common::{digit_seq, flip_set, prob_vector, pv_and_seq};
use num_traits::One;
use proptest::prelude::*;
use salem_core::{
    eval_g, eval_p, flip_digits, nega_eval_direct, nega_to_p_digits, ratio, shift, tail_eval,
    BarredSystem, DigitSeq, FlipSet, ProbVector, Rational,
};

fn system_and_seq() -> impl Strategy<Value = (BarredSystem, DigitSeq)> {
    (pv_and_seq(), flip_set()).prop_map(|((pv, d), fs)| (BarredSystem::new(pv, fs), d))
}

proptest! {
    #[test]
    fn flipping_is_an_involution(d in digit_seq(4), fs in flip_set()) {
        prop_assert_eq!(flip_digits(&flip_digits(&d, &fs), &fs), d);
    }

    #[test]
    fn empty_flip_set_is_identity((pv, d) in pv_and_seq()) {
        let x = eval_p(&d, &pv).unwrap();
        let sys = BarredSystem::new(pv, FlipSet::none());
        let g = eval_g(&d, &sys, d.prefix_len()).unwrap();
        prop_assert_eq!(g.value(), Some(&x));
    }

    #[test]
    fn binary_complement(k in 0u32..30, a in any::<u64>()) {
        let den = 1i64 << k;
        let x = ratio((a % (den as u64 + 1)) as i64, den);
        let pv = ProbVector::uniform(2).unwrap();
        let d = salem_core::expand_exact(&x, &pv, 64).unwrap().unwrap();
        let sys = BarredSystem::new(pv, FlipSet::all());
        let g = eval_g(&d, &sys, 64).unwrap();
        prop_assert_eq!(g.value(), Some(&(Rational::one() - x)));
    }

    #[test]
    fn functional_equation((sys, d) in system_and_seq(), n in 1usize..=8) {
        let outer = tail_eval(&shift(&d, n - 1), &sys, n - 1, 64).unwrap();
        let inner = tail_eval(&shift(&d, n), &sys, n, 64).unwrap();
        let c = d.digit_at(n);
        let expected = sys.bar_beta(n, c) + sys.bar_p(n, c) * inner.value().unwrap();
        prop_assert_eq!(outer.value(), Some(&expected));
    }

    #[test]
    fn barred_weights_equal_flipped_digits((sys, d) in system_and_seq()) {
        let g = eval_g(&d, &sys, 64).unwrap();
        let flipped = eval_p(&flip_digits(&d, sys.flips()), sys.pv()).unwrap();
        prop_assert_eq!(g.value(), Some(&flipped));
    }

    #[test]
    fn truncation_encloses_exact_value((sys, d) in system_and_seq(), depth in 0usize..8) {
        let exact = eval_g(&d, &sys, 64).unwrap();
        let cut = eval_g(&d, &sys, depth).unwrap();
        prop_assert!(cut.contains(exact.lo()));
        if depth < d.prefix_len() {
            let product: Rational = (1..=depth).map(|k| sys.bar_p(k, d.digit_at(k)).clone()).product();
            prop_assert_eq!(cut.width(), product);
        }
    }

    #[test]
    fn nega_matches_flipped_p((pv, d) in pv_and_seq()) {
        let via_p = eval_p(&nega_to_p_digits(&d), &pv).unwrap();
        let direct = nega_eval_direct(&d, &pv, 200).unwrap();
        prop_assert!(direct.contains(&via_p));
        let bound: Rational = num_traits::Pow::pow(pv.max_p().clone(), 200usize);
        prop_assert!(direct.width() <= bound);
    }

    #[test]
    fn shifting_flip_sets(fs in flip_set(), n in 0usize..10, k in 1usize..30) {
        prop_assert_eq!(fs.shifted(n).contains(k), fs.contains(k + n));
    }
}

proptest! {
    #[test]
    fn mask_membership_is_periodic(
        pre in prop::collection::vec(any::<bool>(), 0..5),
        per in prop::collection::vec(any::<bool>(), 1..5),
        k in 1usize..40,
    ) {
        let fs = FlipSet::mask(pre.clone(), per.clone()).unwrap();
        let expected = if k <= pre.len() { pre[k - 1] } else { per[(k - pre.len() - 1) % per.len()] };
        prop_assert_eq!(fs.contains(k), expected);
    }

    #[test]
    fn barred_weights_sum_to_one(pv in prob_vector(), fs in flip_set(), k in 1usize..20) {
        let sys = BarredSystem::new(pv.clone(), fs);
        let total: Rational = (0..pv.q()).map(|c| sys.bar_p(k, c).clone()).sum();
        prop_assert_eq!(total, Rational::one());
    }
}
