use alloc::vec;
use alloc::vec::Vec;

use super::check_budget;
use crate::transforms::{eval_g, BarredSystem};
use crate::{Digit, DigitSeq, Error, Rational, Result};

/// Largest number of points [`ifs_graph_points`] will generate.
pub const IFS_BUDGET: u128 = 1 << 20;

/// `(x, y) ↦ (x_scale·x + x_offset, y_scale·y + y_offset)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap2D {
    pub x_scale: Rational,
    pub x_offset: Rational,
    pub y_scale: Rational,
    pub y_offset: Rational,
}

impl AffineMap2D {
    pub fn apply(&self, (x, y): (&Rational, &Rational)) -> (Rational, Rational) {
        (
            &self.x_scale * x + &self.x_offset,
            &self.y_scale * y + &self.y_offset,
        )
    }
}

/// The `q` maps `ψ_i: x' = p_i x + β_i, y' = p̄_i y + β̄_i` whose attractor is
/// the graph of `g`. Requires a shift-invariant flip set; otherwise the bars
/// depend on the position and no single map per digit exists.
pub fn ifs_maps(sys: &BarredSystem) -> Result<Vec<AffineMap2D>> {
    if !sys.is_shift_invariant() {
        return Err(Error::NotShiftInvariant);
    }
    let pv = sys.pv();
    Ok((0..pv.q())
        .map(|i: Digit| AffineMap2D {
            x_scale: pv.p(i).clone(),
            x_offset: pv.beta(i).clone(),
            y_scale: sys.bar_p(1, i).clone(),
            y_offset: sys.bar_beta(1, i).clone(),
        })
        .collect())
}

/// Images of the seed `(0, g(0))` under all `q^depth` compositions
/// `ψ_{i_1} ∘ ψ_{i_2} ∘ … ∘ ψ_{i_depth}`, ordered lexicographically by
/// `(i_1, …, i_depth)` and hence by increasing `x`.
///
/// The `x`-coordinates are exactly the left endpoints of the rank-`depth`
/// cylinders and every point lies on the graph of `g`.
pub fn ifs_graph_points(sys: &BarredSystem, depth: usize) -> Result<Vec<(Rational, Rational)>> {
    let maps = ifs_maps(sys)?;
    check_budget(sys.q() as u128, depth, IFS_BUDGET)?;
    let origin = DigitSeq::zero_tail(sys.q(), Vec::new())?;
    let seed_y = eval_g(&origin, sys, 0)?.lo().clone();
    let mut points = vec![(Rational::from_integer(0.into()), seed_y)];
    for _ in 0..depth {
        // Applying ψ_i last makes i the outermost (slowest-varying) index.
        points = maps
            .iter()
            .flat_map(|map| points.iter().map(move |(x, y)| map.apply((x, y))))
            .collect();
    }
    Ok(points)
}
