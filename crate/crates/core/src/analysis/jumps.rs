use alloc::boxed::Box;

use num_traits::{One, Zero};

use crate::numeral::{classify, expand, PointClass};
use crate::transforms::{eval_g, BarredSystem, FlipSet, FlipVariant};
use crate::{DigitSeq, Error, ProbVector, Rational, Result};

/// One-sided limits of `g` at a P-rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpReport {
    pub point: Rational,
    pub left_limit: Rational,
    pub right_limit: Rational,
    /// `right_limit - left_limit`; zero iff `g` is continuous at `point`.
    pub jump: Rational,
}

impl JumpReport {
    pub fn is_continuous(&self) -> bool {
        self.jump.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscontinuitySet {
    Finite,
    Countable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Continuity {
    ContinuousEverywhere,
    /// Discontinuities can only sit at P-rational points.
    JumpsAtPRationals(DiscontinuitySet),
}

/// `g` is continuous for the empty flip set and for all positions; otherwise
/// it may jump at P-rationals, finitely many when the flip set is finite.
pub fn continuity_class(fs: &FlipSet) -> Continuity {
    match fs.variant() {
        FlipVariant::None | FlipVariant::All => Continuity::ContinuousEverywhere,
        FlipVariant::Finite => Continuity::JumpsAtPRationals(DiscontinuitySet::Finite),
        FlipVariant::Mask => Continuity::JumpsAtPRationals(DiscontinuitySet::Countable),
    }
}

/// The two expansions `i_1…i_m(0)` and `i_1…[i_m - 1]([q-1])` of a
/// P-rational `x0 ∈ (0, 1)`, zero-tail form first.
pub fn dual_representations(
    x0: &Rational,
    pv: &ProbVector,
    depth: usize,
) -> Result<(DigitSeq, DigitSeq)> {
    if classify(x0, pv, depth)? != PointClass::PRational || x0.is_zero() || x0.is_one() {
        return Err(Error::NotPRational {
            point: x0.clone(),
            depth,
        });
    }
    let upper = expand(x0, pv, depth)?.digits;
    let mut digits = upper.prefix().to_vec();
    let last = digits.last_mut().expect("x0 > 0 has a nonzero digit");
    debug_assert!(*last > 0);
    *last -= 1;
    let lower = DigitSeq::max_tail(pv.q(), digits)?;
    Ok((upper, lower))
}

/// Left and right limits of `g` at the P-rational `x0`: `g` of the
/// `[q-1]`-tail expansion from the left, of the zero-tail expansion from the
/// right. Both are exact.
///
/// `depth` bounds the σ-orbit search used to confirm that `x0` is P-rational.
/// The endpoints 0 and 1 only have one-sided limits and are reported through
/// [`Error::EndpointOneSided`].
pub fn jump_at(x0: &Rational, sys: &BarredSystem, depth: usize) -> Result<JumpReport> {
    let pv = sys.pv();
    if classify(x0, pv, depth)? != PointClass::PRational {
        return Err(Error::NotPRational {
            point: x0.clone(),
            depth,
        });
    }
    if x0.is_zero() || x0.is_one() {
        let d = expand(x0, pv, depth)?.digits;
        let limit = eval_g(&d, sys, d.prefix_len())?.lo().clone();
        return Err(Error::EndpointOneSided {
            point: Box::new(x0.clone()),
            limit: Box::new(limit),
        });
    }
    let (upper, lower) = dual_representations(x0, pv, depth)?;
    let right_limit = eval_g(&upper, sys, upper.prefix_len())?.lo().clone();
    let left_limit = eval_g(&lower, sys, lower.prefix_len())?.lo().clone();
    Ok(JumpReport {
        point: x0.clone(),
        jump: &right_limit - &left_limit,
        left_limit,
        right_limit,
    })
}
