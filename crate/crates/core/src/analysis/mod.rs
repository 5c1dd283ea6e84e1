//! Pointwise and integral properties of `g`.

mod derivative;
mod integral;
mod jumps;
mod monotone;

pub use derivative::{cylinder_image, derivative_estimate, DerivativeTrace};
pub use integral::{
    default_series_tol, integral_closed_form, integral_riemann, integral_series, RIEMANN_BUDGET,
};
pub use jumps::{
    continuity_class, dual_representations, jump_at, Continuity, DiscontinuitySet, JumpReport,
};
pub use monotone::{monotone_witness, MonotoneWitness};
