//! Effective torsion thresholds for K-groups of rings of integers.
//!
//! The pipeline assembled here turns exact group orders and certified zeta
//! enclosures into a single number per field and degree: a threshold such
//! that primes above it cannot divide the order of the relevant torsion
//! subgroup.  The modules split as follows.
//!
//! * [`minkowski_gamma`] computes the order of `GL_{Nd}(F_3)` exactly; its
//!   log is both a summand of the homology bound and a hard floor on the
//!   threshold, because primes up to that order escape the argument.
//! * [`prasad_log_volume`] evaluates the covolume formula in log form,
//!   with the archimedean normalization kept behind a swappable strategy.
//! * [`ktheory_threshold`] combines the two with the placeholder geometric
//!   constants into a [`BoundReport`].
//! * [`compare_bounds`] sets the resulting thresholds against the classical
//!   doubly-exponential discriminant bound, which is kept in `(base,
//!   exponent)` form because it cannot be materialized as a float.

mod compare;
mod gamma;
mod threshold;
mod volume;

pub use compare::{
    compare_bounds, compare_bounds_with_accuracy, k2_log_bound,
    soule_log_bound, CompareRow, SouleLogBound, Winner,
};
pub use gamma::minkowski_gamma;
pub use threshold::{
    clean_form_log_coefficient, homology_log_bound, ktheory_threshold,
    BoundReport, GelanderConstants,
};
pub use volume::{
    prasad_log_volume, prasad_log_volume_with, ArchimedeanFactor,
    FactorialNormalization,
};

use thiserror::Error;

use crate::numberfield::NumberFieldError;

/// Failures specific to threshold assembly and comparison.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    /// A geometric constant was zero, negative, or not finite.
    #[error("{name} must be positive and finite, got {value}")]
    NonPositiveConstant { name: &'static str, value: f64 },
    /// The doubly-exponential comparison bound is only stated for n >= 2.
    #[error("discriminant-power bound requires n >= 2, got n = {n}")]
    SouleRange { n: u32 },
    /// A field construction or zeta evaluation failed.
    #[error(transparent)]
    NumberField(#[from] NumberFieldError),
}
