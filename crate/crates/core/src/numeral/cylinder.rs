use alloc::vec::Vec;

use crate::series::AffineRun;
use crate::{Digit, ProbVector, Rational, Result};

/// The closed interval of all points whose first digits are `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    base: Vec<Digit>,
    lo: Rational,
    hi: Rational,
}

impl Cylinder {
    pub fn base(&self) -> &[Digit] {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// `hi - lo`, which equals the product of `p` over the base.
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_cylinder(&self, other: &Cylinder) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// The `q` rank-`m+1` cylinders `base·c`, in increasing order.
    pub fn children(&self, pv: &ProbVector) -> Vec<Cylinder> {
        let width = self.width();
        (0..pv.q())
            .map(|c| {
                let mut base = self.base.clone();
                base.push(c);
                let lo = &self.lo + &width * pv.beta(c);
                let hi = &self.lo + &width * pv.beta(c + 1);
                Cylinder { base, lo, hi }
            })
            .collect()
    }
}

/// Endpoints `inf = Δ_{base 000...}` and `sup = Δ_{base [q-1][q-1]...}`.
pub fn cylinder_bounds(base: &[Digit], pv: &ProbVector) -> Result<Cylinder> {
    let mut run = AffineRun::identity();
    for &c in base {
        pv.check_digit(c)?;
        run.push(pv.beta(c), pv.p(c));
    }
    let hi = &run.offset + &run.scale;
    Ok(Cylinder {
        base: base.to_vec(),
        lo: run.offset,
        hi,
    })
}
