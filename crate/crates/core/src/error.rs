use alloc::boxed::Box;

use crate::{Digit, Rational};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("base q = {q} is too small; at least two digits are required")]
    BaseTooSmall { q: usize },
    #[error("probability p[{index}] = {value} is not positive")]
    NonPositiveWeight { index: usize, value: Rational },
    #[error("probabilities sum to {sum}, expected 1")]
    SumNotOne { sum: Rational },
    #[error("digit {digit} is out of range for base {q}")]
    DigitOutOfRange { digit: Digit, q: u32 },
    #[error("digit sequence has base {found}, expected base {expected}")]
    BaseMismatch { expected: u32, found: u32 },
    #[error("{value} is outside the unit interval")]
    OutOfUnitInterval { value: Rational },
    #[error("flip positions are 1-based; got position 0")]
    ZeroFlipPosition,
    #[error("a periodic flip mask needs a nonempty period")]
    EmptyMaskPeriod,
    #[error("a periodic digit tail needs a nonempty block")]
    EmptyTailBlock,
    #[error("{point} is not a P-rational point (searched to depth {depth})")]
    NotPRational { point: Rational, depth: usize },
    #[error("{point} is an endpoint of [0, 1]; only the one-sided limit {limit} exists")]
    EndpointOneSided {
        point: Box<Rational>,
        limit: Box<Rational>,
    },
    #[error("the flip set is not shift-invariant (only the empty set and all positions are)")]
    NotShiftInvariant,
    #[error("{count} cylinders exceed the enumeration budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("rank {rank} needs {count} cylinders, above the budget of {budget}")]
    RankTooLarge {
        rank: usize,
        count: u128,
        budget: u128,
    },
    #[error("digit prefix has length {len}, at least {needed} required")]
    PrefixTooShort { len: usize, needed: usize },
    #[error("the Moran alphabet {{1, ..., q-1}} minus {{u}} is empty")]
    EmptyAlphabet,
    #[error("digit u = {u} is out of range for base {q}")]
    MoranDigitOutOfRange { u: Digit, q: u32 },
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("exponent alpha must be finite and non-negative, got {alpha}")]
    InvalidExponent { alpha: f64 },
    #[error("rank list must be nonempty and strictly increasing")]
    InvalidRanks,
    #[error("entropy sum at rank {rank} never drops below the threshold")]
    NoThresholdCrossing { rank: usize },
}
