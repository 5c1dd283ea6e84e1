//! Exact summation of weighted digit series.
//!
//! Every series in the crate has the shape `Σ_k b_k · Π_{j<k} s_j` where the
//! term pairs `(b_k, s_k)` are eventually periodic. A finite run of terms
//! composes into the affine map `t ↦ offset + scale · t`; a periodic run is
//! the fixed point of its map.

use num_traits::{One, Zero};

use crate::Rational;

#[derive(Debug, Clone)]
pub(crate) struct AffineRun {
    pub offset: Rational,
    pub scale: Rational,
}

impl AffineRun {
    pub fn identity() -> Self {
        AffineRun {
            offset: Rational::zero(),
            scale: Rational::one(),
        }
    }

    /// Appends one term: the run now also consumes `(b, s)` after its existing terms.
    pub fn push(&mut self, b: &Rational, s: &Rational) {
        self.offset += &self.scale * b;
        self.scale *= s;
    }

    pub fn apply(&self, tail: &Rational) -> Rational {
        &self.offset + &self.scale * tail
    }

    /// Value of the run repeated forever. Requires `scale < 1`.
    pub fn fixed_point(&self) -> Rational {
        debug_assert!(self.scale < Rational::one());
        &self.offset / (Rational::one() - &self.scale)
    }
}

/// Sums a series whose terms are produced by `term(k)` for `k = 1, 2, ...`,
/// given that `term(k + period) == term(k)` for every `k > stable_from`.
pub(crate) fn eventually_periodic_sum<F>(stable_from: usize, period: usize, mut term: F) -> Rational
where
    F: FnMut(usize) -> (Rational, Rational),
{
    debug_assert!(period >= 1);
    let mut head = AffineRun::identity();
    for k in 1..=stable_from {
        let (b, s) = term(k);
        head.push(&b, &s);
    }
    let mut block = AffineRun::identity();
    for k in stable_from + 1..=stable_from + period {
        let (b, s) = term(k);
        block.push(&b, &s);
    }
    head.apply(&block.fixed_point())
}
