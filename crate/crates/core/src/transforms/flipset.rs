use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Which shape a [`FlipSet`] has after normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipVariant {
    None,
    All,
    Finite,
    Mask,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Pattern {
    None,
    All,
    /// Strictly increasing, nonempty.
    Finite(Vec<usize>),
    /// Canonical: minimal period, shortest preperiod, never constant, never
    /// eventually empty.
    Mask {
        preperiod: Vec<bool>,
        period: Vec<bool>,
    },
}

/// A set `N_B` of 1-based digit positions at which `g` complements digits.
///
/// Supports the empty set, all positions, finite sets and eventually
/// periodic masks. Constructors normalize, so equal sets compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipSet(Pattern);

impl FlipSet {
    pub fn none() -> Self {
        FlipSet(Pattern::None)
    }

    pub fn all() -> Self {
        FlipSet(Pattern::All)
    }

    /// Positions are 1-based; duplicates are ignored. An empty set becomes `none`.
    pub fn finite<I: IntoIterator<Item = usize>>(positions: I) -> Result<Self> {
        let mut v: Vec<usize> = positions.into_iter().collect();
        if v.contains(&0) {
            return Err(Error::ZeroFlipPosition);
        }
        v.sort_unstable();
        v.dedup();
        Ok(if v.is_empty() {
            FlipSet(Pattern::None)
        } else {
            FlipSet(Pattern::Finite(v))
        })
    }

    /// Position `k` is flipped iff `preperiod[k-1]` (for `k ≤ preperiod.len()`)
    /// or `period[(k - 1 - preperiod.len()) % period.len()]`.
    pub fn mask(preperiod: Vec<bool>, period: Vec<bool>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyMaskPeriod);
        }
        let mut preperiod = preperiod;
        let mut period = minimal_period(period);
        while let (Some(&last), Some(&tail_last)) = (preperiod.last(), period.last()) {
            if last != tail_last {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        if period.len() == 1 {
            if preperiod.is_empty() {
                return Ok(if period[0] {
                    FlipSet::all()
                } else {
                    FlipSet::none()
                });
            }
            if !period[0] {
                return FlipSet::finite(
                    preperiod
                        .iter()
                        .enumerate()
                        .filter(|(_, &b)| b)
                        .map(|(i, _)| i + 1),
                );
            }
        }
        Ok(FlipSet(Pattern::Mask { preperiod, period }))
    }

    /// The even positions `2, 4, 6, ...`; flipping them turns a nega-P
    /// representation into a P-representation.
    pub fn even_positions() -> Self {
        FlipSet::mask(Vec::new(), alloc::vec![false, true]).expect("nonempty period")
    }

    pub fn variant(&self) -> FlipVariant {
        match self.0 {
            Pattern::None => FlipVariant::None,
            Pattern::All => FlipVariant::All,
            Pattern::Finite(_) => FlipVariant::Finite,
            Pattern::Mask { .. } => FlipVariant::Mask,
        }
    }

    /// Membership of the 1-based position `k`. Position 0 is never a member.
    pub fn contains(&self, k: usize) -> bool {
        if k == 0 {
            return false;
        }
        match &self.0 {
            Pattern::None => false,
            Pattern::All => true,
            Pattern::Finite(v) => v.binary_search(&k).is_ok(),
            Pattern::Mask { preperiod, period } => {
                if k <= preperiod.len() {
                    preperiod[k - 1]
                } else {
                    period[(k - 1 - preperiod.len()) % period.len()]
                }
            }
        }
    }

    /// Membership is periodic with [`period`](Self::period) beyond this position.
    pub fn stable_from(&self) -> usize {
        match &self.0 {
            Pattern::None | Pattern::All => 0,
            Pattern::Finite(v) => *v.last().expect("nonempty"),
            Pattern::Mask { preperiod, .. } => preperiod.len(),
        }
    }

    pub fn period(&self) -> usize {
        match &self.0 {
            Pattern::Mask { period, .. } => period.len(),
            _ => 1,
        }
    }

    /// Only the empty set and the set of all positions are unchanged by shifting.
    pub fn is_shift_invariant(&self) -> bool {
        matches!(self.0, Pattern::None | Pattern::All)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.0, Pattern::None)
    }

    /// Positions of a finite set, in increasing order.
    pub fn finite_positions(&self) -> Option<&[usize]> {
        match &self.0 {
            Pattern::Finite(v) => Some(v),
            Pattern::None => Some(&[]),
            _ => None,
        }
    }

    /// The set `{k : k + n ∈ self}`.
    pub fn shifted(&self, n: usize) -> FlipSet {
        if n == 0 {
            return self.clone();
        }
        match &self.0 {
            Pattern::None | Pattern::All => self.clone(),
            Pattern::Finite(v) => {
                FlipSet::finite(v.iter().filter(|&&k| k > n).map(|&k| k - n)).expect("positive")
            }
            Pattern::Mask { preperiod, period } => if n <= preperiod.len() {
                FlipSet::mask(preperiod[n..].to_vec(), period.clone())
            } else {
                let mut rotated = period.clone();
                rotated.rotate_left((n - preperiod.len()) % period.len());
                FlipSet::mask(Vec::new(), rotated)
            }
            .expect("nonempty period"),
        }
    }
}

fn minimal_period(bits: Vec<bool>) -> Vec<bool> {
    let n = bits.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (d..n).all(|i| bits[i] == bits[i - d]) {
            return bits[..d].to_vec();
        }
    }
    bits
}

impl fmt::Display for FlipSet {
    /// `none`, `all`, `finite:2,5` or `mask:<preperiod bits>;<period bits>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |f: &mut fmt::Formatter<'_>, v: &[bool]| -> fmt::Result {
            v.iter()
                .try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
        };
        match &self.0 {
            Pattern::None => f.write_str("none"),
            Pattern::All => f.write_str("all"),
            Pattern::Finite(v) => {
                f.write_str("finite:")?;
                for (i, k) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                Ok(())
            }
            Pattern::Mask { preperiod, period } => {
                f.write_str("mask:")?;
                bits(f, preperiod)?;
                f.write_str(";")?;
                bits(f, period)
            }
        }
    }
}
