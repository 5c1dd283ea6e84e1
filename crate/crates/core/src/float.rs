//! Conversions from exact rationals to `f64`.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

/// Nearest `f64` to `x`, saturating to infinity when out of range.
pub fn ratio_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Natural logarithm of a positive rational, accurate for numerators and
/// denominators far outside the `f64` exponent range.
///
/// Returns `NaN` for non-positive input.
pub fn ratio_ln(x: &Rational) -> f64 {
    if !x.is_positive() {
        return f64::NAN;
    }
    big_ln(x.numer()) - big_ln(x.denom())
}

fn big_ln(n: &BigInt) -> f64 {
    debug_assert!(n.sign() == Sign::Plus && !n.is_zero());
    let bits = n.bits();
    if bits <= 1000 {
        return libm::log(n.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let mantissa = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
    libm::log(mantissa) + shift as f64 * core::f64::consts::LN_2
}
