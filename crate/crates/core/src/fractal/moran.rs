use alloc::vec;
use alloc::vec::Vec;

use super::check_budget;
use crate::numeral::ProbVector;
use crate::{ratio_ln, Digit, Error, Rational, Result};

/// Largest number of S-set cylinders [`s_set_cylinders`] will list.
pub const S_SET_BUDGET: u128 = 1 << 20;

/// The set `S_(P,u)` of points whose digits split into blocks
/// `u…u i` (`i − 1` copies of `u`, then `i`) with `i ∈ {1,…,q−1}`, `i ≠ u`.
#[derive(Debug, Clone, PartialEq)]
pub struct MoranSpec {
    pv: ProbVector,
    u: Digit,
}

impl MoranSpec {
    pub fn new(pv: ProbVector, u: Digit) -> Result<Self> {
        if u >= pv.q() {
            return Err(Error::MoranDigitOutOfRange { u, q: pv.q() });
        }
        Ok(MoranSpec { pv, u })
    }

    pub fn pv(&self) -> &ProbVector {
        &self.pv
    }

    pub fn u(&self) -> Digit {
        self.u
    }

    /// Block-closing digits `{1,…,q−1} ∖ {u}`.
    pub fn alphabet(&self) -> Vec<Digit> {
        (1..self.pv.q()).filter(|&i| i != self.u).collect()
    }

    /// Contraction ratio `p_i p_u^{i−1}` of each block, in alphabet order.
    pub fn weights(&self) -> Vec<Rational> {
        let pu = self.pv.p(self.u);
        self.alphabet()
            .into_iter()
            .map(|i| {
                let mut w = self.pv.p(i).clone();
                for _ in 1..i {
                    w *= pu;
                }
                w
            })
            .collect()
    }

    /// Digits of the block closed by `i`.
    pub fn block(&self, i: Digit) -> Vec<Digit> {
        let mut b = vec![self.u; i as usize - 1];
        b.push(i);
        b
    }

    /// `F(α) = Σ (p_i p_u^{i−1})^α`.
    pub fn moran_sum(&self, alpha: f64) -> f64 {
        self.log_weights()
            .iter()
            .map(|lw| libm::exp(alpha * lw))
            .sum()
    }

    fn log_weights(&self) -> Vec<f64> {
        self.weights().iter().map(ratio_ln).collect()
    }
}

/// Root of `F(α) = 1` in `[0, 1]`, to `|F(α) − 1| ≤ tol`.
///
/// `F(0)` is the alphabet size and `F(1) < 1`. With a single block digit
/// `F` never reaches 1 on `(0, 1]` and the result is 0.
pub fn moran_dimension(spec: &MoranSpec, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::NonPositiveTolerance);
    }
    let logs = spec.log_weights();
    if logs.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    let f = |a: f64| -> f64 { logs.iter().map(|lw| libm::exp(a * lw)).sum() };
    if f(0.0) <= 1.0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    loop {
        let mid = 0.5 * (lo + hi);
        let value = f(mid);
        if (value - 1.0).abs() <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if value > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// All digit bases made of exactly `rank` blocks, in lexicographic order of
/// their block-closing digits.
pub fn s_set_cylinders(spec: &MoranSpec, rank: usize) -> Result<Vec<Vec<Digit>>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let alphabet = spec.alphabet();
    check_budget(alphabet.len() as u128, rank, S_SET_BUDGET)?;
    let mut bases: Vec<Vec<Digit>> = vec![Vec::new()];
    for _ in 0..rank {
        bases = bases
            .iter()
            .flat_map(|b| {
                alphabet.iter().map(move |&i| {
                    let mut next = b.clone();
                    next.extend(spec.block(i));
                    next
                })
            })
            .collect();
    }
    Ok(bases)
}

/// Total length of the rank-`rank` cylinders covering `S_(P,u)`; equals
/// `F(1)^rank`.
pub fn s_set_covering_measure(spec: &MoranSpec, rank: usize) -> Result<Rational> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let f1: Rational = spec.weights().into_iter().sum();
    Ok(num_traits::Pow::pow(f1, rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{cylinder_bounds, ratio};

    fn spec(p: &[(i64, i64)], u: Digit) -> MoranSpec {
        let pv = ProbVector::new(p.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap();
        MoranSpec::new(pv, u).unwrap()
    }

    #[test]
    fn weights_and_alphabet() {
        let s = spec(&[(1, 10), (2, 10), (3, 10), (4, 10)], 2);
        assert_eq!(s.alphabet(), vec![1, 3]);
        assert_eq!(s.weights(), vec![ratio(1, 5), ratio(9, 250)]);
        assert_eq!(s.block(3), vec![2, 2, 3]);
    }

    #[test]
    fn uniform_four_root() {
        let s = MoranSpec::new(ProbVector::uniform(4).unwrap(), 1).unwrap();
        let a = moran_dimension(&s, 1e-13).unwrap();
        assert!((s.moran_sum(a) - 1.0).abs() <= 1e-13);
        assert!((a - 0.2028).abs() < 1e-3);
    }

    #[test]
    fn degenerate_and_errors() {
        let s = MoranSpec::new(ProbVector::uniform(3).unwrap(), 1).unwrap();
        assert_eq!(moran_dimension(&s, 1e-9).unwrap(), 0.0);
        let s = MoranSpec::new(ProbVector::uniform(2).unwrap(), 1).unwrap();
        assert_eq!(moran_dimension(&s, 1e-9).unwrap_err(), Error::EmptyAlphabet);
        assert!(s_set_cylinders(&s, 3).unwrap().is_empty());
        assert_eq!(
            moran_dimension(&s, 0.0).unwrap_err(),
            Error::NonPositiveTolerance
        );
        assert_eq!(
            MoranSpec::new(ProbVector::uniform(2).unwrap(), 2).unwrap_err(),
            Error::MoranDigitOutOfRange { u: 2, q: 2 }
        );
    }

    #[test]
    fn cylinders_sum_to_covering_measure() {
        let s = spec(&[(1, 10), (2, 10), (3, 10), (4, 10)], 2);
        for rank in 1..=4 {
            let bases = s_set_cylinders(&s, rank).unwrap();
            assert_eq!(bases.len(), 1 << rank);
            let total: Rational = bases
                .iter()
                .map(|b| cylinder_bounds(b, s.pv()).unwrap().width())
                .sum();
            assert_eq!(total, s_set_covering_measure(&s, rank).unwrap());
        }
    }

    #[test]
    fn rank_two_uniform_four() {
        let s = MoranSpec::new(ProbVector::uniform(4).unwrap(), 1).unwrap();
        let bases = s_set_cylinders(&s, 2).unwrap();
        let expected: Vec<Vec<Digit>> = vec![
            vec![1, 2, 1, 2],
            vec![1, 2, 1, 1, 3],
            vec![1, 1, 3, 1, 2],
            vec![1, 1, 3, 1, 1, 3],
        ];
        assert_eq!(bases, expected);
    }
}
