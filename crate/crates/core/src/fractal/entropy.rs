use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::SQRT_2;

use super::check_budget;
use crate::transforms::BarredSystem;
use crate::{ratio_ln, Error, Rational, Result};

/// Largest number of rank-`r` rectangles an [`EntropyProfile`] may describe.
/// Counts stay exact in `f64` below `2^53`.
pub const ENTROPY_BUDGET: u128 = 1 << 53;

/// Level at which [`graph_dimension_estimate`] reads off the exponent: the
/// `α = 1` entropy sum of the uniform binary graph at every rank.
pub const ENTROPY_THRESHOLD: f64 = SQRT_2;

/// The squared diagonals of the `q^r` rank-`r` covering rectangles of the
/// graph of `g`, grouped by value.
///
/// The rectangle over the cylinder `Λ_{i_1…i_r}` has sides `Π p_{i_j}` and
/// `Π p̄_{i_j}`; its squared diagonal is kept as an exact rational.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyProfile {
    rank: usize,
    classes: Vec<(Rational, u64)>,
    ln_values: Vec<f64>,
}

impl EntropyProfile {
    pub fn new(sys: &BarredSystem, rank: usize) -> Result<Self> {
        check_budget(sys.q() as u128, rank, ENTROPY_BUDGET)?;
        let pv = sys.pv();
        // Rectangles sharing both side lengths are merged as we go.
        let mut sides: BTreeMap<(Rational, Rational), u64> = BTreeMap::new();
        sides.insert(
            (
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
            ),
            1,
        );
        for k in 1..=rank {
            let mut next = BTreeMap::new();
            for ((w, h), n) in &sides {
                for c in 0..pv.q() {
                    let key = (w * pv.p(c), h * sys.bar_p(k, c));
                    *next.entry(key).or_insert(0) += n;
                }
            }
            sides = next;
        }
        let mut diagonals: BTreeMap<Rational, u64> = BTreeMap::new();
        for ((w, h), n) in sides {
            *diagonals.entry(&w * &w + &h * &h).or_insert(0) += n;
        }
        let classes: Vec<_> = diagonals.into_iter().collect();
        let ln_values = classes.iter().map(|(d2, _)| ratio_ln(d2)).collect();
        Ok(EntropyProfile {
            rank,
            classes,
            ln_values,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Distinct squared diagonals in increasing order, with multiplicities.
    pub fn squared_diagonals(&self) -> &[(Rational, u64)] {
        &self.classes
    }

    pub fn rectangle_count(&self) -> u64 {
        self.classes.iter().map(|(_, n)| n).sum()
    }

    /// `Σ diagonal^alpha` over all rectangles.
    pub fn sum(&self, alpha: f64) -> f64 {
        self.classes
            .iter()
            .zip(&self.ln_values)
            .map(|((_, n), ln_d2)| *n as f64 * libm::exp(0.5 * alpha * ln_d2))
            .sum()
    }
}

/// `Σ (√((Π p)² + (Π p̄)²))^alpha` over the rank-`rank` rectangles.
pub fn entropy_sum(sys: &BarredSystem, alpha: f64, rank: usize) -> Result<f64> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::InvalidExponent { alpha });
    }
    Ok(EntropyProfile::new(sys, rank)?.sum(alpha))
}

/// Per-rank exponents and their extrapolated limit.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    /// `(rank, α_r)` with `entropy_sum(α_r, rank) = ENTROPY_THRESHOLD`.
    pub per_rank: Vec<(usize, f64)>,
    /// `α_∞` from fitting `α_r = α_∞ + c / r` through the last two ranks
    /// (the single estimate when only one rank is given).
    pub trend: f64,
}

/// Entropy-sum estimate of the dimension of the graph of `g`.
///
/// For each rank the exponent where the entropy sum falls through
/// [`ENTROPY_THRESHOLD`] is found by bisection. The graph has dimension 1;
/// for the identity and for uniform `P` the per-rank exponent is exactly 1,
/// and for asymmetric `P` with all positions flipped it approaches 1 like
/// `1 + O(1/r)`.
pub fn graph_dimension_estimate(sys: &BarredSystem, ranks: &[usize]) -> Result<DimensionEstimate> {
    if !sys.is_shift_invariant() {
        return Err(Error::NotShiftInvariant);
    }
    if ranks.is_empty() || ranks[0] == 0 || ranks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidRanks);
    }
    let mut per_rank = Vec::with_capacity(ranks.len());
    for &rank in ranks {
        let profile = EntropyProfile::new(sys, rank)?;
        per_rank.push((rank, threshold_exponent(&profile)?));
    }
    let trend = match per_rank.as_slice() {
        [.., (r1, a1), (r2, a2)] => {
            let (r1, r2) = (*r1 as f64, *r2 as f64);
            (r2 * a2 - r1 * a1) / (r2 - r1)
        }
        [(_, a)] => *a,
        [] => unreachable!("ranks checked nonempty"),
    };
    Ok(DimensionEstimate { per_rank, trend })
}

fn threshold_exponent(profile: &EntropyProfile) -> Result<f64> {
    let above = |alpha: f64| profile.sum(alpha) > ENTROPY_THRESHOLD;
    // At alpha = 0 the sum is q^r ≥ 2 > √2.
    let mut lo = 0.0;
    let mut hi = 1.0;
    while above(hi) {
        lo = hi;
        hi *= 2.0;
        if hi > 1024.0 {
            return Err(Error::NoThresholdCrossing {
                rank: profile.rank(),
            });
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if above(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
