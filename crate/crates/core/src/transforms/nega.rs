use num_traits::{One, Zero};

use super::{flip_digits, FlipSet};
use crate::{Digit, DigitSeq, Enclosure, ProbVector, Rational, Result};

/// `δ̃` of the alternating series: `β_{i}` at odd positions, `1 - β_{q-1-i}`
/// (written as a sum of the top weights) at even ones.
fn delta(pv: &ProbVector, k: usize, digit: Digit) -> Rational {
    let q = pv.q();
    if k.is_multiple_of(2) {
        if digit == q - 1 {
            Rational::one()
        } else {
            (q - 1 - digit..q).map(|t| pv.p(t)).sum()
        }
    } else if digit == 0 {
        Rational::zero()
    } else {
        (0..digit).map(|t| pv.p(t)).sum()
    }
}

/// `p̃`: `p_i` at odd positions, `p_{q-1-i}` at even ones.
fn weight(pv: &ProbVector, k: usize, digit: Digit) -> &Rational {
    if k.is_multiple_of(2) {
        pv.p(pv.complement(digit))
    } else {
        pv.p(digit)
    }
}

/// The nega-P expansion evaluated term by term:
///
/// ```text
/// Σ_{i<i_1} p_i + Σ_{k≥2} (-1)^{k-1} δ̃_{i_k} Π_{j<k} p̃_{i_j} + Σ_{m≥1} Π_{j≤2m-1} p̃_{i_j}
/// ```
///
/// The three sums are cut after the terms belonging to the first `depth`
/// positions. Those partial sums together equal the first `depth` terms of a
/// non-negative series whose remainder is at most `Π_{j≤depth} p̃_{i_j}`, which
/// is the width of the returned enclosure.
pub fn nega_eval_direct(d: &DigitSeq, pv: &ProbVector, depth: usize) -> Result<Enclosure> {
    d.check_base(pv)?;
    if depth == 0 {
        return Ok(Enclosure::new(Rational::zero(), Rational::one()));
    }
    let leading: Rational = (0..d.digit_at(1)).map(|t| pv.p(t)).sum();

    let mut alternating = Rational::zero();
    let mut trailing = Rational::zero();
    let mut product = weight(pv, 1, d.digit_at(1)).clone();
    for k in 2..=depth {
        let c = d.digit_at(k);
        // product = Π_{j<k} p̃_{i_j}
        let term = delta(pv, k, c) * &product;
        if k.is_multiple_of(2) {
            alternating -= term;
            trailing += &product;
        } else {
            alternating += term;
        }
        product *= weight(pv, k, c);
    }
    let lo = leading + alternating + trailing;
    let hi = &lo + product;
    Ok(Enclosure::new(lo, hi))
}

/// `Δ^{-P}_{i_1 i_2 i_3 ...} = Δ^{P}_{i_1 [q-1-i_2] i_3 ...}`: complements every even position.
pub fn nega_to_p_digits(d: &DigitSeq) -> DigitSeq {
    flip_digits(d, &FlipSet::even_positions())
}
