//! The digit-flip map `g` and the nega-P expansion.

mod barred;
mod flipset;
mod nega;

pub use barred::{eval_g, flip_digits, tail_eval, BarredSystem};
pub use flipset::{FlipSet, FlipVariant};
pub use nega::{nega_eval_direct, nega_to_p_digits};
