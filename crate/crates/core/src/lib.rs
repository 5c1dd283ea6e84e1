//! Exact arithmetic for P-representations of numbers in `[0, 1]` and for the
//! digit-flip map `g` that sends a P-representation to its sign-variable
//! (±P) counterpart.
//!
//! A probability vector `P = (p_0, ..., p_{q-1})` defines the expansion
//!
//! ```text
//! x = β_{i_1} + Σ_{k≥2} β_{i_k} · p_{i_1} ··· p_{i_{k-1}},   β_t = p_0 + ... + p_{t-1}
//! ```
//!
//! and a set of positions `N_B` defines `g`, which evaluates the same series
//! with digits `i_k` replaced by `q-1-i_k` at every `k ∈ N_B`.
//!
//! Everything in the kernel is computed with arbitrary-precision rationals.
//! Infinite digit sequences are eventually periodic, so every value the
//! crate reports for a [`DigitSeq`] is exact; truncated evaluations come back
//! as certified [`Enclosure`]s. Floating point appears only where a
//! transcendental power is unavoidable (entropy sums and Moran dimensions).
//!
//! Modules:
//! - [`numeral`]: probability vectors, digit sequences, cylinders, shift and classification.
//! - [`transforms`]: flip sets, the map `g`, and the nega-P expansion.
//! - [`analysis`]: jumps, monotonicity witnesses, derivative ratios, and integrals of `g`.
//! - [`fractal`]: the affine system generating the graph of `g`, entropy sums, Moran sets.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod enclosure;
mod error;
mod float;
mod series;

pub mod analysis;
pub mod fractal;
pub mod numeral;
pub mod transforms;

pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use float::{ratio_ln, ratio_to_f64};
pub use numeral::{
    classify, cylinder_bounds, encode, eval_p, expand, expand_exact, shift, shift_value, Cylinder,
    DigitSeq, Expansion, PointClass, ProbVector, Tail,
};
pub use transforms::{
    eval_g, flip_digits, nega_eval_direct, nega_to_p_digits, tail_eval, BarredSystem, FlipSet,
    FlipVariant,
};

/// Arbitrary-precision rational number used throughout the kernel.
pub type Rational = num_rational::BigRational;

/// A single digit of a P-representation, always in `0..q`.
pub type Digit = u32;

/// Builds a rational from a numerator and denominator.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
