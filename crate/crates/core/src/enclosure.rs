use core::fmt;

use num_traits::One;

use crate::Rational;

/// A closed rational interval `[lo, hi]` certified to contain a value.
///
/// Degenerate enclosures (`lo == hi`) carry exact results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "enclosure bounds out of order: {lo} > {hi}");
        Enclosure { lo, hi }
    }

    pub fn exact(value: Rational) -> Self {
        Enclosure {
            hi: value.clone(),
            lo: value,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The value when the enclosure is degenerate.
    pub fn value(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / (Rational::one() + Rational::one())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// True when every point of `self` lies strictly above every point of `other`.
    pub fn strictly_above(&self, other: &Enclosure) -> bool {
        self.lo > other.hi
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}
