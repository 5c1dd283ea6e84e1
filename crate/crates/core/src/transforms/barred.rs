use alloc::vec::Vec;

use num_integer::Integer;

use super::FlipSet;
use crate::series::{eventually_periodic_sum, AffineRun};
use crate::{Digit, DigitSeq, Enclosure, ProbVector, Rational, Result, Tail};

/// A probability vector paired with a flip set: the data defining `g`.
///
/// At a flipped position `k` the digit `i` is read as `q-1-i`, so its weight
/// becomes `p_{q-1-i}` and its offset `β_{q-1-i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarredSystem {
    pv: ProbVector,
    flips: FlipSet,
}

impl BarredSystem {
    pub fn new(pv: ProbVector, flips: FlipSet) -> Self {
        BarredSystem { pv, flips }
    }

    pub fn pv(&self) -> &ProbVector {
        &self.pv
    }

    pub fn flips(&self) -> &FlipSet {
        &self.flips
    }

    pub fn q(&self) -> u32 {
        self.pv.q()
    }

    pub fn bar_digit(&self, k: usize, digit: Digit) -> Digit {
        if self.flips.contains(k) {
            self.pv.complement(digit)
        } else {
            digit
        }
    }

    pub fn bar_p(&self, k: usize, digit: Digit) -> &Rational {
        self.pv.p(self.bar_digit(k, digit))
    }

    pub fn bar_beta(&self, k: usize, digit: Digit) -> &Rational {
        self.pv.beta(self.bar_digit(k, digit))
    }

    /// The system seen from position `offset + 1` on: position `k` of the
    /// result is position `k + offset` of `self`.
    pub fn with_offset(&self, offset: usize) -> BarredSystem {
        BarredSystem {
            pv: self.pv.clone(),
            flips: self.flips.shifted(offset),
        }
    }

    pub(crate) fn is_shift_invariant(&self) -> bool {
        self.flips.is_shift_invariant()
    }
}

/// Complements the digit at every position in `fs`.
///
/// The result keeps an explicit prefix long enough to cover the irregular
/// part of `fs` and a tail whose block spans a common period of the input
/// tail and the flip pattern; a `Zero` tail under `All` becomes `Max`.
pub fn flip_digits(d: &DigitSeq, fs: &FlipSet) -> DigitSeq {
    if fs.is_empty() {
        return d.clone();
    }
    let q = d.q();
    let flip = |k: usize| {
        let c = d.digit_at(k);
        if fs.contains(k) {
            q - 1 - c
        } else {
            c
        }
    };
    let head = d.prefix_len().max(fs.stable_from());
    let period = d.tail_period().lcm(&fs.period());
    let prefix: Vec<Digit> = (1..=head).map(flip).collect();
    let block: Vec<Digit> = (head + 1..=head + period).map(flip).collect();
    DigitSeq::new(q, prefix, Tail::Periodic(block)).expect("complemented digits stay in range")
}

/// `g(x) = β̄_{i_1} + Σ_{k≥2} β̄_{i_k} p̄_{i_1}···p̄_{i_{k-1}}`.
///
/// With `depth ≥` the prefix length the value is exact (the tail and the flip
/// pattern are both eventually periodic, so the series sums in closed form).
/// With a shorter `depth` the series is cut after `depth` terms and the
/// enclosure has width `p̄_{i_1}···p̄_{i_depth}`.
pub fn eval_g(d: &DigitSeq, sys: &BarredSystem, depth: usize) -> Result<Enclosure> {
    d.check_base(sys.pv())?;
    if depth < d.prefix_len() {
        let mut run = AffineRun::identity();
        for k in 1..=depth {
            let c = d.digit_at(k);
            run.push(sys.bar_beta(k, c), sys.bar_p(k, c));
        }
        let hi = &run.offset + &run.scale;
        return Ok(Enclosure::new(run.offset, hi));
    }
    let head = d.prefix_len().max(sys.flips().stable_from());
    let period = d.tail_period().lcm(&sys.flips().period());
    let value = eventually_periodic_sum(head, period, |k| {
        let c = d.digit_at(k);
        (sys.bar_beta(k, c).clone(), sys.bar_p(k, c).clone())
    });
    Ok(Enclosure::exact(value))
}

/// [`eval_g`] with every position moved by `offset`: the `k`-th digit of `d`
/// is barred as if it sat at absolute position `k + offset`.
///
/// Satisfies `tail_eval(d, n-1) = β̄(n, i_n) + p̄(n, i_n) · tail_eval(σd, n)`.
pub fn tail_eval(
    d: &DigitSeq,
    sys: &BarredSystem,
    offset: usize,
    depth: usize,
) -> Result<Enclosure> {
    eval_g(d, &sys.with_offset(offset), depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{eval_p, ratio, Error};
    use alloc::vec;

    fn p3() -> ProbVector {
        ProbVector::new(vec![ratio(1, 5), ratio(3, 10), ratio(1, 2)]).unwrap()
    }

    #[test]
    fn flip_examples() {
        let d = DigitSeq::zero_tail(2, vec![0, 1]).unwrap();
        let f = flip_digits(&d, &FlipSet::all());
        assert_eq!(f.prefix(), &[1, 0]);
        assert_eq!(f.tail(), &Tail::Max);

        let d = DigitSeq::periodic(3, vec![2, 1], vec![0, 2]).unwrap();
        assert_eq!(flip_digits(&d, &FlipSet::none()), d);

        let d = DigitSeq::zero_tail(3, vec![1, 2, 0]).unwrap();
        let f = flip_digits(&d, &FlipSet::finite([2]).unwrap());
        assert_eq!(f, DigitSeq::zero_tail(3, vec![1, 0, 0]).unwrap());
        assert_eq!(f.tail(), &Tail::Zero);
    }

    #[test]
    fn finite_flips_beyond_prefix_extend_it() {
        let d = DigitSeq::zero_tail(3, vec![1]).unwrap();
        let f = flip_digits(&d, &FlipSet::finite([4]).unwrap());
        assert_eq!(f.prefix(), &[1, 0, 0, 2]);
        assert_eq!(f.tail(), &Tail::Zero);
    }

    #[test]
    fn eval_g_examples() {
        let half = ProbVector::uniform(2).unwrap();
        let all = BarredSystem::new(half.clone(), FlipSet::all());
        let quarter = DigitSeq::zero_tail(2, vec![0, 1]).unwrap();
        assert_eq!(
            eval_g(&quarter, &all, 8).unwrap(),
            Enclosure::exact(ratio(3, 4))
        );

        let none = BarredSystem::new(p3(), FlipSet::none());
        let d = DigitSeq::periodic(3, vec![1, 2], vec![0, 1]).unwrap();
        assert_eq!(
            eval_g(&d, &none, 2).unwrap(),
            Enclosure::exact(eval_p(&d, &p3()).unwrap())
        );

        // 7/20 = Δ_{12(0)}; flipping position 2 gives Δ_{10(0)} = β_1 = 1/5
        let two = BarredSystem::new(p3(), FlipSet::finite([2]).unwrap());
        let x = DigitSeq::zero_tail(3, vec![1, 2]).unwrap();
        assert_eq!(eval_g(&x, &two, 4).unwrap(), Enclosure::exact(ratio(1, 5)));
    }

    #[test]
    fn truncated_enclosure_width() {
        let sys = BarredSystem::new(p3(), FlipSet::even_positions());
        let d = DigitSeq::zero_tail(3, vec![2, 1, 0, 2, 1, 1]).unwrap();
        let exact = eval_g(&d, &sys, 6).unwrap();
        let cut = eval_g(&d, &sys, 3).unwrap();
        let w = sys.bar_p(1, 2) * sys.bar_p(2, 1) * sys.bar_p(3, 0);
        assert_eq!(cut.width(), w);
        assert!(cut.contains(exact.lo()));
    }

    #[test]
    fn tail_eval_examples() {
        // Finite{2} at offset 2: input position 1 is absolute 3, never flipped
        let sys = BarredSystem::new(p3(), FlipSet::finite([2]).unwrap());
        let d = DigitSeq::periodic(3, vec![2, 0], vec![1, 2]).unwrap();
        assert_eq!(
            tail_eval(&d, &sys, 2, 4).unwrap(),
            Enclosure::exact(eval_p(&d, &p3()).unwrap())
        );
        assert_eq!(
            tail_eval(&d, &sys, 0, 4).unwrap(),
            eval_g(&d, &sys, 4).unwrap()
        );
    }

    #[test]
    fn base_mismatch_is_reported() {
        let sys = BarredSystem::new(p3(), FlipSet::all());
        let d = DigitSeq::zero_tail(2, vec![1]).unwrap();
        assert!(matches!(
            eval_g(&d, &sys, 3),
            Err(Error::BaseMismatch { .. })
        ));
    }
}
