mod common;

use common::{digits, flip_set, pow, prob_vector};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use salem_core::analysis::{
    cylinder_image, derivative_estimate, integral_closed_form, integral_riemann, integral_series,
    jump_at, monotone_witness,
};
use salem_core::{
    encode, eval_g, eval_p, ratio, BarredSystem, DigitSeq, FlipSet, ProbVector, Rational,
};

/// A P-rational in `(0, 1)` given by a base whose last digit is nonzero.
fn p_rational() -> impl Strategy<Value = (ProbVector, Vec<u32>)> {
    prob_vector().prop_flat_map(|pv| {
        let q = pv.q();
        (Just(pv), digits(q, 0..6), 1..q).prop_map(|(pv, mut base, last)| {
            base.push(last);
            (pv, base)
        })
    })
}

fn finite_flips() -> impl Strategy<Value = FlipSet> {
    prop::collection::vec(1usize..6, 1..3).prop_map(|v| FlipSet::finite(v).unwrap())
}

fn g_at(base: Vec<u32>, sys: &BarredSystem) -> (Rational, Rational) {
    let d = DigitSeq::zero_tail(sys.q(), base).unwrap();
    (
        eval_p(&d, sys.pv()).unwrap(),
        eval_g(&d, sys, 64).unwrap().lo().clone(),
    )
}

proptest! {
    #[test]
    fn one_sided_limits_are_approached((pv, base) in p_rational(), fs in flip_set(), n in 1usize..12) {
        let q = pv.q();
        let sys = BarredSystem::new(pv.clone(), fs);
        let x0 = eval_p(&DigitSeq::zero_tail(q, base.clone()).unwrap(), &pv).unwrap();
        let report = jump_at(&x0, &sys, 64).unwrap();
        let bound = pow(pv.max_p(), base.len() + n);

        // from the right: base 0^n 1 (0)
        let mut right = base.clone();
        right.extend(std::iter::repeat_n(0, n));
        right.push(1);
        let (x, g) = g_at(right, &sys);
        prop_assert!(x > x0);
        prop_assert!((g - &report.right_limit).abs() <= bound);

        // from the left: base' [q-1]^n [q-2] ... with base' the lowered base
        let mut left = base.clone();
        *left.last_mut().unwrap() -= 1;
        left.extend(std::iter::repeat_n(q - 1, n));
        left.push(q - 2);
        let (x, g) = g_at(left, &sys);
        prop_assert!(x < x0);
        prop_assert!((g - &report.left_limit).abs() <= bound);
    }

    #[test]
    fn shift_invariant_flips_never_jump((pv, base) in p_rational(), all in any::<bool>()) {
        let fs = if all { FlipSet::all() } else { FlipSet::none() };
        let sys = BarredSystem::new(pv.clone(), fs);
        let x0 = eval_p(&DigitSeq::zero_tail(pv.q(), base).unwrap(), &pv).unwrap();
        prop_assert!(jump_at(&x0, &sys, 64).unwrap().is_continuous());
    }

    #[test]
    fn finite_flips_only_jump_early((pv, base) in p_rational(), fs in finite_flips()) {
        let max = *fs.finite_positions().unwrap().last().unwrap();
        let sys = BarredSystem::new(pv.clone(), fs);
        let x0 = eval_p(&DigitSeq::zero_tail(pv.q(), base.clone()).unwrap(), &pv).unwrap();
        let report = jump_at(&x0, &sys, 64).unwrap();
        if base.len() > max {
            prop_assert!(report.is_continuous());
        }
    }

    #[test]
    fn finite_flips_are_monotone_on_deep_cylinders(
        pv in prob_vector(),
        fs in finite_flips(),
        seed in prop::collection::vec(0u32..100, 16),
    ) {
        let q = pv.q();
        let max = *fs.finite_positions().unwrap().last().unwrap();
        let sys = BarredSystem::new(pv, fs);
        let base: Vec<u32> = seed[..max].iter().map(|d| d % q).collect();
        let mut a = base.clone();
        a.extend(seed[max..max + 4].iter().map(|d| d % q));
        let mut b = base;
        b.extend(seed[max + 4..max + 8].iter().map(|d| d % q));
        let (xa, ga) = g_at(a, &sys);
        let (xb, gb) = g_at(b, &sys);
        prop_assert_eq!(xa.cmp(&xb), ga.cmp(&gb));
    }

    #[test]
    fn identity_preserves_order(pv in prob_vector(), a in digits(5, 1..10), b in digits(5, 1..10)) {
        let q = pv.q();
        let sys = BarredSystem::new(pv, FlipSet::none());
        let (xa, ga) = g_at(a.iter().map(|d| d % q).collect(), &sys);
        let (xb, gb) = g_at(b.iter().map(|d| d % q).collect(), &sys);
        prop_assert_eq!(xa.cmp(&xb), ga.cmp(&gb));
    }

    #[test]
    fn nonempty_flips_reverse_order(pv in prob_vector(), fs in flip_set()) {
        prop_assume!(!fs.is_empty());
        let sys = BarredSystem::new(pv, fs);
        let w = monotone_witness(&sys, 64).unwrap().expect("a flipped position below 64");
        let digits_of = |x: &Rational| encode(x, sys.pv(), 64).unwrap().leading(64);
        let (x1, g1) = g_at(digits_of(&w.x1), &sys);
        let (x2, g2) = g_at(digits_of(&w.x2), &sys);
        prop_assert!(x1 < x2);
        prop_assert!(g1 > g2);
        prop_assert!(w.g1.strictly_above(&w.g2));
    }

    #[test]
    fn derivative_ratio_is_weight_product(pv in prob_vector(), fs in flip_set(), raw in digits(100, 1..40)) {
        let q = pv.q();
        let base: Vec<u32> = raw.iter().map(|d| d % q).collect();
        let sys = BarredSystem::new(pv.clone(), fs);
        let trace = derivative_estimate(&base, &sys, base.len()).unwrap();
        let mut product = Rational::from_integer(1.into());
        for (k, &c) in base.iter().enumerate() {
            product *= sys.bar_p(k + 1, c) / pv.p(c);
            prop_assert_eq!(&trace.ratios[k], &product);
        }
        let image = cylinder_image(&base, &sys).unwrap();
        let inside = eval_g(&DigitSeq::zero_tail(q, base.clone()).unwrap(), &sys, 64).unwrap();
        prop_assert!(image.contains(inside.lo()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn integrals_agree(pv in prob_vector(), fs in flip_set()) {
        let sys = BarredSystem::new(pv.clone(), fs);
        let rank = (1..).take_while(|r| (pv.q() as u64).pow(*r) <= 4096).last().unwrap() as usize;
        let series = integral_series(&sys, &ratio(1, 1_000_000_000_000)).unwrap();
        let riemann = integral_riemann(&sys, rank).unwrap();
        prop_assert!(series.intersects(&riemann));
        if let Ok(exact) = integral_closed_form(&sys) {
            prop_assert!(series.contains(&exact));
            prop_assert!(riemann.contains(&exact));
        }
        prop_assert!(series.lo() >= &Rational::zero());
    }
}
