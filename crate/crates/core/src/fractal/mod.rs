//! The graph of `g` as the attractor of an affine system, entropy sums over
//! its covering rectangles, and Moran-type subsets of `[0, 1]`.

mod entropy;
mod ifs;
mod moran;

pub use entropy::{
    entropy_sum, graph_dimension_estimate, DimensionEstimate, EntropyProfile, ENTROPY_BUDGET,
    ENTROPY_THRESHOLD,
};
pub use ifs::{ifs_graph_points, ifs_maps, AffineMap2D, IFS_BUDGET};
pub use moran::{
    moran_dimension, s_set_covering_measure, s_set_cylinders, MoranSpec, S_SET_BUDGET,
};

use crate::{Error, Result};

/// `base^exp`, or an error when it exceeds `budget`.
pub(crate) fn check_budget(base: u128, exp: usize, budget: u128) -> Result<u128> {
    let count = u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u128::MAX);
    if count > budget {
        Err(Error::BudgetExceeded { count, budget })
    } else {
        Ok(count)
    }
}
