use alloc::vec::Vec;

use crate::series::AffineRun;
use crate::transforms::BarredSystem;
use crate::{Digit, DigitSeq, Enclosure, Error, Rational, Result};

/// Ratios `μ_g(Λ_m) / |Λ_m|` along the cylinders `Λ_m` of one digit prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeTrace {
    pub digits: DigitSeq,
    /// `ratios[m - 1]` belongs to the rank-`m` cylinder.
    pub ratios: Vec<Rational>,
}

impl DerivativeTrace {
    pub fn last(&self) -> Option<&Rational> {
        self.ratios.last()
    }
}

/// Interval hull of `g(Λ_base)`: `[A, A + Π p̄]` with `A` the barred
/// partial sum over the base.
pub fn cylinder_image(base: &[Digit], sys: &BarredSystem) -> Result<Enclosure> {
    let mut run = AffineRun::identity();
    for (k, &c) in base.iter().enumerate() {
        sys.pv().check_digit(c)?;
        run.push(sys.bar_beta(k + 1, c), sys.bar_p(k + 1, c));
    }
    let hi = &run.offset + &run.scale;
    Ok(Enclosure::new(run.offset, hi))
}

/// For `m = 1..=max_rank`, the width of the image enclosure of the rank-`m`
/// cylinder along `digits` divided by the cylinder's length. This is the
/// product `Π_{t≤m} p̄_{c_t} / p_{c_t}`; its decay to zero is the
/// cylinder-level form of `g'(x) = 0`.
pub fn derivative_estimate(
    digits: &[Digit],
    sys: &BarredSystem,
    max_rank: usize,
) -> Result<DerivativeTrace> {
    if digits.len() < max_rank {
        return Err(Error::PrefixTooShort {
            len: digits.len(),
            needed: max_rank,
        });
    }
    let pv = sys.pv();
    let mut image = AffineRun::identity();
    let mut length = AffineRun::identity();
    let mut ratios = Vec::with_capacity(max_rank);
    for (k, &c) in digits[..max_rank].iter().enumerate() {
        pv.check_digit(c)?;
        image.push(sys.bar_beta(k + 1, c), sys.bar_p(k + 1, c));
        length.push(pv.beta(c), pv.p(c));
        ratios.push(&image.scale / &length.scale);
    }
    Ok(DerivativeTrace {
        digits: DigitSeq::zero_tail(pv.q(), digits.to_vec())?,
        ratios,
    })
}
