//! Three independent computations of `∫_0^1 g(x) dx`.

use num_traits::{One, Signed, Zero};

use crate::transforms::BarredSystem;
use crate::{Enclosure, Error, Rational, Result};

/// Largest number of rank-`r` cylinders [`integral_riemann`] will enumerate.
pub const RIEMANN_BUDGET: u128 = 1 << 20;

/// Default width target for [`integral_series`]: `10^-12`.
pub fn default_series_tol() -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(10u64.pow(12)))
}

/// Expected barred offset and weight at position `k` when the digit is drawn
/// with law `p`: `(Σ_c β̄(k, c) p_c, Σ_c p̄(k, c) p_c)`.
fn position_moments(sys: &BarredSystem, k: usize) -> (Rational, Rational) {
    let pv = sys.pv();
    let mut v = Rational::zero();
    let mut w = Rational::zero();
    for c in 0..pv.q() {
        v += sys.bar_beta(k, c) * pv.p(c);
        w += sys.bar_p(k, c) * pv.p(c);
    }
    (v, w)
}

/// `U / (1 - W)` with `U = Σ_t β̄_t p_t` and `W = Σ_t p̄_t p_t`.
///
/// Only defined for flip sets that look the same at every position (empty or
/// all), where `g(β_t + p_t y) = β̄_t + p̄_t g(y)` holds with fixed bars.
pub fn integral_closed_form(sys: &BarredSystem) -> Result<Rational> {
    if !sys.is_shift_invariant() {
        return Err(Error::NotShiftInvariant);
    }
    let (u, w) = position_moments(sys, 1);
    Ok(u / (Rational::one() - w))
}

/// `Σ_k v_k Π_{j<k} w_j` with the per-position moments `v_k, w_k`, summed
/// until the tail enclosure is at most `tol` wide.
///
/// Lebesgue measure makes the P-digits of `x` independent with law `p`,
/// so `E[g] = Σ_k E[β̄_k] Π_{j<k} E[p̄_j]` for any flip set. After `K` terms
/// the remainder lies between `v_min Π / (1 - w_min)` and
/// `v_max Π / (1 - w_max)`, `Π = w_1···w_K`.
pub fn integral_series(sys: &BarredSystem, tol: &Rational) -> Result<Enclosure> {
    if !tol.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    // Every position is either flipped or not, so two moment pairs cover all.
    let plain = position_moments(
        &BarredSystem::new(sys.pv().clone(), crate::FlipSet::none()),
        1,
    );
    let flipped = position_moments(
        &BarredSystem::new(sys.pv().clone(), crate::FlipSet::all()),
        1,
    );
    let (v_min, v_max, w_min, w_max) = if sys.flips().is_empty() {
        (
            plain.0.clone(),
            plain.0.clone(),
            plain.1.clone(),
            plain.1.clone(),
        )
    } else {
        (
            plain.0.clone().min(flipped.0.clone()),
            plain.0.clone().max(flipped.0.clone()),
            plain.1.clone().min(flipped.1.clone()),
            plain.1.clone().max(flipped.1.clone()),
        )
    };
    let one = Rational::one();
    let low_factor = &v_min / (&one - &w_min);
    let high_factor = &v_max / (&one - &w_max);

    let mut partial = Rational::zero();
    let mut product = Rational::one();
    let mut k = 1;
    loop {
        let lo = &partial + &low_factor * &product;
        let hi = &partial + &high_factor * &product;
        if &(&hi - &lo) <= tol {
            return Ok(Enclosure::new(lo, hi));
        }
        let (v, w) = if sys.flips().contains(k) {
            (&flipped.0, &flipped.1)
        } else {
            (&plain.0, &plain.1)
        };
        partial += &product * v;
        product *= w;
        k += 1;
    }
}

/// Lower and upper sums over the rank-`rank` cylinder partition, using the
/// image enclosure `[A_b, A_b + Π p̄]` of `g` on each cylinder `Λ_b`.
///
/// Cylinders are visited depth-first in increasing order, so the result is
/// independent of anything but the inputs.
pub fn integral_riemann(sys: &BarredSystem, rank: usize) -> Result<Enclosure> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let count = (sys.q() as u128)
        .checked_pow(rank as u32)
        .unwrap_or(u128::MAX);
    if count > RIEMANN_BUDGET {
        return Err(Error::RankTooLarge {
            rank,
            count,
            budget: RIEMANN_BUDGET,
        });
    }
    let mut sums = RiemannSums {
        sys,
        rank,
        lower: Rational::zero(),
        upper: Rational::zero(),
    };
    sums.visit(1, &Rational::zero(), &Rational::one(), &Rational::one());
    Ok(Enclosure::new(sums.lower, sums.upper))
}

struct RiemannSums<'a> {
    sys: &'a BarredSystem,
    rank: usize,
    lower: Rational,
    upper: Rational,
}

impl RiemannSums<'_> {
    fn visit(&mut self, k: usize, offset: &Rational, length: &Rational, scale: &Rational) {
        if k > self.rank {
            self.lower += length * offset;
            self.upper += length * (offset + scale);
            return;
        }
        let pv = self.sys.pv();
        for c in 0..pv.q() {
            let next_offset = offset + scale * self.sys.bar_beta(k, c);
            let next_length = length * pv.p(c);
            let next_scale = scale * self.sys.bar_p(k, c);
            self.visit(k + 1, &next_offset, &next_length, &next_scale);
        }
    }
}
