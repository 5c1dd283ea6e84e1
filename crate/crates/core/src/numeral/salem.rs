use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::digits::{eval_p, DigitSeq, Tail};
use crate::{Digit, ProbVector, Rational, Result};

/// Distribution function of `η = Σ ξ_k q^{-k}` with independent digits
/// `P{ξ_k = i} = p_i`: zero below 0, one from 1 on, and in between the
/// P-weighted series over the base-`q` digits of `x` (the Salem function).
///
/// Exact for every rational `x`; the base-`q` expansion is found by long
/// division with remainder-cycle detection.
pub fn cdf_eta(x: &Rational, pv: &ProbVector) -> Result<Rational> {
    if x.is_negative() {
        return Ok(Rational::zero());
    }
    if x >= &Rational::one() {
        return Ok(Rational::one());
    }
    eval_p(&radix_digits(x, pv.q()), pv)
}

/// Base-`q` digits of `x ∈ [0, 1)`, zero-tail convention.
fn radix_digits(x: &Rational, q: u32) -> DigitSeq {
    let den = x.denom().clone();
    let base = BigInt::from(q);
    let mut rem = x.numer().clone();
    let mut digits: Vec<Digit> = Vec::new();
    let mut seen = BTreeMap::new();
    loop {
        if rem.is_zero() {
            return DigitSeq::new(q, digits, Tail::Zero).expect("digits below q");
        }
        if let Some(&start) = seen.get(&rem) {
            let block = digits.split_off(start);
            return DigitSeq::new(q, digits, Tail::Periodic(block)).expect("digits below q");
        }
        seen.insert(rem.clone(), digits.len());
        let (d, r) = (&rem * &base).div_rem(&den);
        digits.push(u32::try_from(d).expect("digit below q"));
        rem = r;
    }
}
