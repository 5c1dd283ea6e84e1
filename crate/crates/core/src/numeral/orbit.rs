//! Greedy encoding of rationals and the σ-orbit that drives it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::digits::{DigitSeq, Tail};
use crate::{Digit, Error, ProbVector, Rational, Result};

/// Classification of a point by its expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    /// Two expansions exist: one ending in zeros, one ending in `q-1`.
    PRational,
    /// The expansion is unique (here: eventually periodic and not constant).
    PIrrational,
    /// The orbit neither terminated nor cycled within `depth` shifts.
    Undetermined { depth: usize },
}

/// The result of [`expand`]: the digits found and, when the orbit did not
/// terminate, the σ-state left over after the last digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub digits: DigitSeq,
    pub residual: Option<Rational>,
}

impl Expansion {
    pub fn is_exact(&self) -> bool {
        self.residual.is_none()
    }
}

enum OrbitEnd {
    Zero,
    One,
    Cycle { start: usize },
    Open { state: Rational },
}

struct Orbit {
    digits: Vec<Digit>,
    end: OrbitEnd,
}

fn check_unit(x: &Rational) -> Result<()> {
    if x.is_negative() || x > &Rational::one() {
        Err(Error::OutOfUnitInterval { value: x.clone() })
    } else {
        Ok(())
    }
}

fn step(s: &Rational, pv: &ProbVector) -> (Digit, Rational) {
    let c = pv.digit_for(s);
    let next = (s - pv.beta(c)) / pv.p(c);
    (c, next)
}

fn walk(x: &Rational, pv: &ProbVector, max_steps: usize, detect_cycles: bool) -> Result<Orbit> {
    check_unit(x)?;
    let mut digits = Vec::new();
    let mut seen = BTreeMap::new();
    let mut s = x.clone();
    for k in 0..=max_steps {
        if s.is_zero() {
            return Ok(Orbit {
                digits,
                end: OrbitEnd::Zero,
            });
        }
        if s.is_one() {
            return Ok(Orbit {
                digits,
                end: OrbitEnd::One,
            });
        }
        if detect_cycles {
            if let Some(&start) = seen.get(&s) {
                return Ok(Orbit {
                    digits,
                    end: OrbitEnd::Cycle { start },
                });
            }
            seen.insert(s.clone(), k);
        }
        if k == max_steps {
            break;
        }
        let (c, next) = step(&s, pv);
        digits.push(c);
        s = next;
    }
    Ok(Orbit {
        digits,
        end: OrbitEnd::Open { state: s },
    })
}

/// Greedy expansion of `x` to at most `depth` digits.
///
/// At each step the digit is the unique `c` with `β_c ≤ σ^k(x) < β_{c+1}`,
/// so boundary points take their zero-tail representation. If the orbit
/// reaches 0 the tail is `Zero` and the prefix ends there; `x = 1` gives
/// `[q-1]` with a `Max` tail. Otherwise the prefix has exactly `depth`
/// digits, the tail is `Zero` (the value is then the left endpoint of the
/// rank-`depth` cylinder containing `x`) and `residual` holds `σ^depth(x)`.
pub fn expand(x: &Rational, pv: &ProbVector, depth: usize) -> Result<Expansion> {
    let orbit = walk(x, pv, depth, false)?;
    let q = pv.q();
    let (tail, residual) = match orbit.end {
        OrbitEnd::Zero => (Tail::Zero, None),
        OrbitEnd::One => (Tail::Max, None),
        OrbitEnd::Open { state } => (Tail::Zero, Some(state)),
        OrbitEnd::Cycle { .. } => unreachable!("cycle detection disabled"),
    };
    Ok(Expansion {
        digits: DigitSeq::new(q, orbit.digits, tail)?,
        residual,
    })
}

/// The rank-`depth` digit prefix of `x`; see [`expand`].
pub fn encode(x: &Rational, pv: &ProbVector, depth: usize) -> Result<DigitSeq> {
    Ok(expand(x, pv, depth)?.digits)
}

/// The exact, eventually periodic expansion of `x` if its σ-orbit
/// terminates or cycles within `max_steps` shifts.
///
/// With uniform `P` every rational cycles, within at most its denominator
/// many steps.
pub fn expand_exact(x: &Rational, pv: &ProbVector, max_steps: usize) -> Result<Option<DigitSeq>> {
    let orbit = walk(x, pv, max_steps, true)?;
    let q = pv.q();
    let seq = match orbit.end {
        OrbitEnd::Zero => DigitSeq::new(q, orbit.digits, Tail::Zero)?,
        OrbitEnd::One => DigitSeq::new(q, orbit.digits, Tail::Max)?,
        OrbitEnd::Cycle { start } => {
            let mut digits = orbit.digits;
            let block = digits.split_off(start);
            DigitSeq::new(q, digits, Tail::Periodic(block))?
        }
        OrbitEnd::Open { .. } => return Ok(None),
    };
    Ok(Some(seq))
}

/// One application of the shift operator to a value: `σ(x) = (x - β_{i_1}) / p_{i_1}`.
pub fn shift_value(x: &Rational, pv: &ProbVector) -> Result<Rational> {
    check_unit(x)?;
    Ok(step(x, pv).1)
}

/// Decides P-rationality by following the σ-orbit of `x` for at most
/// `max_depth` shifts.
///
/// Reaching 0 or 1 means a constant tail (P-rational). A repeated state
/// other than 0 or 1 means a periodic, non-constant tail, because 0 and 1 are
/// the only fixed points of the all-zero and all-`(q-1)` branches.
pub fn classify(x: &Rational, pv: &ProbVector, max_depth: usize) -> Result<PointClass> {
    let orbit = walk(x, pv, max_depth, true)?;
    Ok(match orbit.end {
        OrbitEnd::Zero | OrbitEnd::One => PointClass::PRational,
        OrbitEnd::Cycle { .. } => PointClass::PIrrational,
        OrbitEnd::Open { .. } => PointClass::Undetermined { depth: max_depth },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{eval_p, ratio};
    use alloc::vec;

    fn p3() -> ProbVector {
        ProbVector::new(vec![ratio(1, 5), ratio(3, 10), ratio(1, 2)]).unwrap()
    }

    #[test]
    fn encode_examples() {
        let d = encode(&ratio(7, 20), &p3(), 8).unwrap();
        assert_eq!(d.prefix(), &[1, 2]);
        assert_eq!(d.tail(), &Tail::Zero);

        let z = encode(&ratio(0, 1), &p3(), 8).unwrap();
        assert!(z.prefix().is_empty());
        assert_eq!(z.tail(), &Tail::Zero);

        let half = ProbVector::uniform(2).unwrap();
        let t = expand(&ratio(1, 3), &half, 6).unwrap();
        assert_eq!(t.digits.prefix(), &[0, 1, 0, 1, 0, 1]);
        assert_eq!(t.residual, Some(ratio(1, 3)));

        let one = encode(&ratio(1, 1), &p3(), 4).unwrap();
        assert_eq!(one.prefix(), &[2]);
        assert_eq!(one.tail(), &Tail::Max);
    }

    #[test]
    fn encode_rejects_outside_unit_interval() {
        assert!(matches!(
            encode(&ratio(3, 2), &p3(), 4),
            Err(Error::OutOfUnitInterval { .. })
        ));
        assert!(matches!(
            classify(&ratio(-1, 2), &p3(), 4),
            Err(Error::OutOfUnitInterval { .. })
        ));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_value(&ratio(7, 20), &p3()).unwrap(), ratio(1, 2));
        assert_eq!(shift_value(&ratio(0, 1), &p3()).unwrap(), ratio(0, 1));
        assert_eq!(shift_value(&ratio(1, 1), &p3()).unwrap(), ratio(1, 1));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&ratio(7, 20), &p3(), 10).unwrap(),
            PointClass::PRational
        );
        assert_eq!(
            classify(&ratio(0, 1), &p3(), 10).unwrap(),
            PointClass::PRational
        );
        let half = ProbVector::uniform(2).unwrap();
        assert_eq!(
            classify(&ratio(1, 3), &half, 10).unwrap(),
            PointClass::PIrrational
        );
        assert_eq!(
            classify(&ratio(1, 3), &half, 1).unwrap(),
            PointClass::Undetermined { depth: 1 }
        );
    }

    #[test]
    fn exact_expansion_of_periodic_point() {
        let half = ProbVector::uniform(2).unwrap();
        let d = expand_exact(&ratio(1, 3), &half, 10).unwrap().unwrap();
        assert_eq!(d, DigitSeq::periodic(2, vec![], vec![0, 1]).unwrap());
        let x = ratio(5, 7);
        let d = expand_exact(&x, &ProbVector::uniform(3).unwrap(), 20)
            .unwrap()
            .unwrap();
        assert_eq!(eval_p(&d, &ProbVector::uniform(3).unwrap()).unwrap(), x);
    }
}
