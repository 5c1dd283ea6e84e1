use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::{Digit, Error, Rational, Result};

/// Digit probabilities `P = (p_0, ..., p_{q-1})` together with their
/// cumulative sums `β_0 = 0, β_t = p_0 + ... + p_{t-1}, β_q = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbVector {
    p: Vec<Rational>,
    beta: Vec<Rational>,
}

impl ProbVector {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        if p.len() < 2 {
            return Err(Error::BaseTooSmall { q: p.len() });
        }
        if let Some((index, value)) = p.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(Error::NonPositiveWeight {
                index,
                value: value.clone(),
            });
        }
        let mut beta = Vec::with_capacity(p.len() + 1);
        let mut acc = Rational::zero();
        beta.push(acc.clone());
        for v in &p {
            acc += v;
            beta.push(acc.clone());
        }
        if !acc.is_one() {
            return Err(Error::SumNotOne { sum: acc });
        }
        Ok(ProbVector { p, beta })
    }

    /// `p_j = 1/q` for every digit; the P-representation is then the base-q expansion.
    pub fn uniform(q: u32) -> Result<Self> {
        let w = Rational::new(1.into(), q.max(1).into());
        ProbVector::new((0..q).map(|_| w.clone()).collect())
    }

    pub fn q(&self) -> u32 {
        self.p.len() as u32
    }

    pub fn p(&self, digit: Digit) -> &Rational {
        &self.p[digit as usize]
    }

    /// `β_t` for `t` in `0..=q`.
    pub fn beta(&self, t: u32) -> &Rational {
        &self.beta[t as usize]
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.p
    }

    pub fn betas(&self) -> &[Rational] {
        &self.beta
    }

    pub fn max_digit(&self) -> Digit {
        self.q() - 1
    }

    /// The digit `q-1-i`.
    pub fn complement(&self, digit: Digit) -> Digit {
        self.max_digit() - digit
    }

    pub fn min_p(&self) -> &Rational {
        self.p.iter().min().expect("q >= 2")
    }

    pub fn max_p(&self) -> &Rational {
        self.p.iter().max().expect("q >= 2")
    }

    pub fn is_uniform(&self) -> bool {
        self.p.iter().all(|v| v == &self.p[0])
    }

    pub fn check_digit(&self, digit: Digit) -> Result<()> {
        if digit < self.q() {
            Ok(())
        } else {
            Err(Error::DigitOutOfRange { digit, q: self.q() })
        }
    }

    /// The unique digit `c` with `β_c ≤ s < β_{c+1}`, or `q-1` for `s = 1`.
    pub(crate) fn digit_for(&self, s: &Rational) -> Digit {
        debug_assert!(!s.is_negative() && s <= &Rational::one());
        // beta[0] = 0 <= s, so the partition point is at least 1.
        let above = self.beta.partition_point(|b| b <= s);
        (above - 1).min(self.p.len() - 1) as Digit
    }
}
