//! Minimal projective resolutions, Ext dimensions computed twice (from resolutions and
//! from bar complexes), and the closed-form series for the cohomology of `gr u(g)`.

mod bar;
mod resolution;
mod series;

pub use bar::{ext_dims_bar, ext_series_bar, orthogonal_idempotents, BarExt, BarMode, BarOptions, DEFAULT_BAR_BUDGET};
pub use resolution::{minimal_resolution, syzygy, CohomologyClass, Resolution};
pub use series::{binomial, e1_page_dims, gr_cohomology_series};

use thiserror::Error;

use crate::repcat::RepError;

/// Default resolution depth.
pub const DEFAULT_DEPTH: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("bar complex in degree {degree} needs {size} cochains, over the budget of {limit}")]
    Budget { degree: usize, size: usize, limit: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("the algebra has no trivial module")]
    NoTrivial,
    #[error("degree {degree} is beyond the resolution depth {depth}")]
    Depth { degree: usize, depth: usize },
    #[error("expected {expected} coordinates, got {got}")]
    Coordinates { expected: usize, got: usize },
    #[error("class mixes even and odd components")]
    NotHomogeneous,
}
