use alloc::vec;

use crate::transforms::{eval_g, BarredSystem};
use crate::{eval_p, DigitSeq, Enclosure, Rational, Result};

/// Two points `x1 < x2` whose images under `g` are in reverse order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneWitness {
    /// The flipped position at which the two expansions first differ.
    pub position: usize,
    pub x1: Rational,
    pub x2: Rational,
    pub g1: Enclosure,
    pub g2: Enclosure,
}

/// Finds an order reversal of `g` caused by the first flipped position
/// `m ≤ rank`, or `None` when no position in `1..=rank` is flipped.
///
/// The pair is `x1 = Δ_{0…0 0 (0)}` and `x2 = Δ_{0…0 [q-1] (0)}`, differing
/// only at position `m`. Writing `T` for the barred tail value at the common
/// continuation, `g(x1) - g(x2) = Π p̄ · (1 - p_{q-1} + (p_{q-1} - p_0) T)`,
/// which is positive for every `T ∈ [0, 1]`.
pub fn monotone_witness(sys: &BarredSystem, rank: usize) -> Result<Option<MonotoneWitness>> {
    let Some(position) = (1..=rank).find(|&k| sys.flips().contains(k)) else {
        return Ok(None);
    };
    let q = sys.q();
    let pv = sys.pv();
    let mut low = vec![0; position];
    let mut high = low.clone();
    high[position - 1] = q - 1;
    low[position - 1] = 0;
    let d1 = DigitSeq::zero_tail(q, low)?;
    let d2 = DigitSeq::zero_tail(q, high)?;
    let g1 = eval_g(&d1, sys, position)?;
    let g2 = eval_g(&d2, sys, position)?;
    let witness = MonotoneWitness {
        position,
        x1: eval_p(&d1, pv)?,
        x2: eval_p(&d2, pv)?,
        g1,
        g2,
    };
    debug_assert!(witness.x1 < witness.x2 && witness.g1.strictly_above(&witness.g2));
    Ok(Some(witness))
}
