//! P-representations: probability vectors, digit sequences, cylinders,
//! encoding and the shift operator.

mod cylinder;
mod digits;
mod orbit;
mod prob;
mod salem;

pub use cylinder::{cylinder_bounds, Cylinder};
pub use digits::{eval_p, shift, DigitSeq, Tail};
pub use orbit::{classify, encode, expand, expand_exact, shift_value, Expansion, PointClass};
pub use prob::ProbVector;
pub use salem::cdf_eta;
