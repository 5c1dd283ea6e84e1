use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::series::eventually_periodic_sum;
use crate::{Digit, Error, ProbVector, Rational, Result};

/// What follows the explicit digits of a [`DigitSeq`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tail {
    /// Trailing zeros.
    Zero,
    /// Trailing `q-1` digits.
    Max,
    /// A block repeated forever. Never all zeros or all `q-1` after normalization.
    Periodic(Vec<Digit>),
}

/// An eventually periodic digit sequence in base `q`: the address of a point of `[0, 1]`.
///
/// Equality compares the infinite sequences, so `12(0)` equals `120(0)` and
/// `1(21)` equals `12(12)`.
#[derive(Debug, Clone)]
pub struct DigitSeq {
    q: u32,
    prefix: Vec<Digit>,
    tail: Tail,
}

impl DigitSeq {
    /// Validates digits and normalizes the tail: periodic blocks are reduced
    /// to their minimal period and constant blocks become `Zero`/`Max`. An
    /// empty prefix with a `Max` tail is stored as `[q-1]` followed by `Max`.
    pub fn new(q: u32, prefix: Vec<Digit>, tail: Tail) -> Result<Self> {
        if q < 2 {
            return Err(Error::BaseTooSmall { q: q as usize });
        }
        let check = |d: &Digit| {
            if *d < q {
                Ok(())
            } else {
                Err(Error::DigitOutOfRange { digit: *d, q })
            }
        };
        prefix.iter().try_for_each(check)?;
        let tail = match tail {
            Tail::Periodic(block) => {
                if block.is_empty() {
                    return Err(Error::EmptyTailBlock);
                }
                block.iter().try_for_each(check)?;
                let block = minimal_block(block);
                match block.as_slice() {
                    [0] => Tail::Zero,
                    [d] if *d == q - 1 => Tail::Max,
                    _ => Tail::Periodic(block),
                }
            }
            other => other,
        };
        let prefix = if prefix.is_empty() && tail == Tail::Max {
            vec![q - 1]
        } else {
            prefix
        };
        Ok(DigitSeq { q, prefix, tail })
    }

    pub fn zero_tail(q: u32, prefix: Vec<Digit>) -> Result<Self> {
        DigitSeq::new(q, prefix, Tail::Zero)
    }

    pub fn max_tail(q: u32, prefix: Vec<Digit>) -> Result<Self> {
        DigitSeq::new(q, prefix, Tail::Max)
    }

    pub fn periodic(q: u32, prefix: Vec<Digit>, block: Vec<Digit>) -> Result<Self> {
        DigitSeq::new(q, prefix, Tail::Periodic(block))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn prefix(&self) -> &[Digit] {
        &self.prefix
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Length of the repeating block of the tail.
    pub fn tail_period(&self) -> usize {
        match &self.tail {
            Tail::Zero | Tail::Max => 1,
            Tail::Periodic(block) => block.len(),
        }
    }

    /// True when the tail is all zeros or all `q-1`.
    pub fn has_constant_tail(&self) -> bool {
        !matches!(self.tail, Tail::Periodic(_))
    }

    /// The digit at 1-based position `k`.
    pub fn digit_at(&self, k: usize) -> Digit {
        assert!(k >= 1, "digit positions are 1-based");
        if k <= self.prefix.len() {
            return self.prefix[k - 1];
        }
        let i = k - self.prefix.len() - 1;
        match &self.tail {
            Tail::Zero => 0,
            Tail::Max => self.q - 1,
            Tail::Periodic(block) => block[i % block.len()],
        }
    }

    /// The first `n` digits.
    pub fn leading(&self, n: usize) -> Vec<Digit> {
        (1..=n).map(|k| self.digit_at(k)).collect()
    }

    /// The repeating block of the tail written out explicitly.
    pub fn tail_block(&self) -> Vec<Digit> {
        match &self.tail {
            Tail::Zero => vec![0],
            Tail::Max => vec![self.q - 1],
            Tail::Periodic(block) => block.clone(),
        }
    }

    pub(crate) fn check_base(&self, pv: &ProbVector) -> Result<()> {
        if self.q == pv.q() {
            Ok(())
        } else {
            Err(Error::BaseMismatch {
                expected: pv.q(),
                found: self.q,
            })
        }
    }
}

impl PartialEq for DigitSeq {
    fn eq(&self, other: &Self) -> bool {
        if self.q != other.q {
            return false;
        }
        let horizon = self.prefix.len().max(other.prefix.len())
            + self.tail_period().lcm(&other.tail_period());
        (1..=horizon).all(|k| self.digit_at(k) == other.digit_at(k))
    }
}

impl Eq for DigitSeq {}

impl fmt::Display for DigitSeq {
    /// Prefix digits followed by the repeating block in parentheses, e.g. `12(0)`.
    /// Digits are comma-separated when `q > 10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.q > 10 { "," } else { "" };
        let write_run = |f: &mut fmt::Formatter<'_>, run: &[Digit]| -> fmt::Result {
            for (i, d) in run.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{d}")?;
            }
            Ok(())
        };
        write_run(f, &self.prefix)?;
        f.write_str("(")?;
        write_run(f, &self.tail_block())?;
        f.write_str(")")
    }
}

fn minimal_block(block: Vec<Digit>) -> Vec<Digit> {
    let n = block.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (d..n).all(|i| block[i] == block[i - d]) {
            return block[..d].to_vec();
        }
    }
    block
}

/// Exact value `β_{i_1} + Σ_{k≥2} β_{i_k} p_{i_1}···p_{i_{k-1}}` of the sequence.
pub fn eval_p(d: &DigitSeq, pv: &ProbVector) -> Result<Rational> {
    d.check_base(pv)?;
    Ok(eventually_periodic_sum(
        d.prefix_len(),
        d.tail_period(),
        |k| {
            let c = d.digit_at(k);
            (pv.beta(c).clone(), pv.p(c).clone())
        },
    ))
}

/// Drops the first `n` digits. Shifting past the prefix rotates the periodic
/// tail, so the operation is total.
pub fn shift(d: &DigitSeq, n: usize) -> DigitSeq {
    if n <= d.prefix.len() {
        return DigitSeq::new(d.q, d.prefix[n..].to_vec(), d.tail.clone())
            .expect("digits already validated");
    }
    let tail = match &d.tail {
        Tail::Periodic(block) => {
            let r = (n - d.prefix.len()) % block.len();
            let mut rotated = block[r..].to_vec();
            rotated.extend_from_slice(&block[..r]);
            Tail::Periodic(rotated)
        }
        constant => constant.clone(),
    };
    DigitSeq::new(d.q, Vec::new(), tail).expect("digits already validated")
}
