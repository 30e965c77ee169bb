//! Assembly of the torsion threshold and its per-field report.

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::dd::{self, DoubleDouble};
use crate::numberfield::{BoundedReal, ImagQuadField};

use super::compare::{soule_log_bound, SouleLogBound};
use super::gamma::minkowski_gamma;
use super::volume::{prasad_log_volume, ArchimedeanFactor, FactorialNormalization};
use super::BoundsError;

/// Notice attached to every report; the geometric constants have never
/// been made explicit, so thresholds are relative to the defaults below.
const DISCLAIMER: &str = "alpha and delta are placeholder - Gelander constants \
                          are non-explicit; thresholds are normalized to the \
                          supplied values";

/// Multiplicative constants of the thick-thin decomposition argument.
///
/// The finiteness theorem guarantees constants `alpha` and `delta` exist
/// such that a quotient of the symmetric space is homotopy equivalent to a
/// simplicial complex with at most `alpha * vol` vertices of degree at
/// most `delta`.  No explicit values are published, so the default of 1
/// for both is a placeholder that keeps the pipeline runnable; every
/// report carries a disclaimer saying so.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GelanderConstants {
    alpha: f64,
    delta: f64,
}

impl GelanderConstants {
    /// Validates that both constants are positive, normal, finite reals.
    pub fn new(alpha: f64, delta: f64) -> Result<Self, BoundsError> {
        for (name, value) in [("alpha", alpha), ("delta", delta)] {
            if !value.is_finite() || value < f64::MIN_POSITIVE {
                return Err(BoundsError::NonPositiveConstant { name, value });
            }
        }
        Ok(GelanderConstants { alpha, delta })
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn delta(self) -> f64 {
        self.delta
    }
}

impl Default for GelanderConstants {
    fn default() -> Self {
        GelanderConstants { alpha: 1.0, delta: 1.0 }
    }
}

/// `ln alpha + n ln delta` as an enclosure.
fn log_constants(consts: GelanderConstants, n: u32) -> BoundedReal {
    let (ln_alpha, alpha_err) = DoubleDouble::from(consts.alpha).ln();
    let (ln_delta, delta_err) = DoubleDouble::from(consts.delta).ln();
    let scaled = ln_delta * DoubleDouble::from_u64(u64::from(n));
    let value = ln_alpha + scaled;
    let err = alpha_err
        + f64::from(n) * delta_err
        + (scaled.to_f64().abs() + value.to_f64().abs()) * dd::OP_REL_ERR;
    BoundedReal::new(value, err)
}

/// Log of a positive exact integer, rounded outward into the radius.
fn log_of_big(x: &BigInt) -> BoundedReal {
    let (value, err) = dd::ln_big_abs(x);
    BoundedReal::new(value, err)
}

/// Upper bound on `ln |tors H_n|` for the arithmetic lattice attached to
/// the field: `ln alpha + n ln delta + ln gamma(2, 2n+1)` plus the log
/// volume at rank `N = 2n + 1`.  The radius is dominated by the requested
/// zeta accuracy.
pub fn homology_log_bound(
    field: ImagQuadField,
    n: u32,
    consts: GelanderConstants,
    target_error: f64,
) -> Result<BoundedReal, BoundsError> {
    assert!(n >= 2, "the homology bound is stated for n >= 2");
    let big_n = 2 * n + 1;
    let gamma = minkowski_gamma(2, big_n);
    let volume = prasad_log_volume(field, big_n, target_error)?;
    Ok(log_constants(consts, n) + log_of_big(&gamma) + volume)
}

/// Log of the field-independent coefficient `C(2, n)` in the clean form
/// of the homology bound: the bound is at most
/// `ln C(2, n) + 2n(n+1) ln |D_F|`, where the zeta product has been
/// replaced by its `2^(N-1)` cap.
pub fn clean_form_log_coefficient(
    n: u32,
    consts: GelanderConstants,
) -> BoundedReal {
    assert!(n >= 2, "the clean form is stated for n >= 2");
    let big_n = 2 * n + 1;
    let gamma = minkowski_gamma(2, big_n);
    let (log_a, log_a_err) = FactorialNormalization.log_factor(2, big_n);
    let cap = DoubleDouble::LN_2 * DoubleDouble::from_u64(u64::from(big_n) - 1);
    let cap_err = f64::from(big_n - 1) * (dd::EPS + dd::OP_REL_ERR);
    log_constants(consts, n)
        + log_of_big(&gamma)
        + BoundedReal::new(log_a, log_a_err)
        + BoundedReal::new(cap, cap_err)
}

/// Enclosure of `max(a, b)` given enclosures of `a` and `b`.
fn interval_max(a: BoundedReal, b: BoundedReal) -> BoundedReal {
    let (carrier, other) = if a.value() >= b.value() { (a, b) } else { (b, a) };
    // The true maximum lies in [max of lowers, max of uppers], and the
    // carrier midpoint lies inside that window.
    let lower = carrier.lower().max(other.lower());
    let upper = carrier.upper().max(other.upper());
    let mid = carrier.value().to_f64();
    let radius = (upper - mid).max(mid - lower).max(carrier.error());
    BoundedReal::new(carrier.value(), radius * (1.0 + 1e-12))
}

/// Everything the threshold computation established for one `(F, n)` pair.
///
/// `log_p_threshold` is the operative number: primes `p` with
/// `ln p > log_p_threshold` cannot divide the order of the torsion
/// subgroup under study, subject to the placeholder constants.  Primes up
/// to `gamma` are excluded from the statement entirely, which the report
/// records as a note.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub field: ImagQuadField,
    pub n: u32,
    pub big_n: u32,
    pub gamma: BigInt,
    pub log_volume: BoundedReal,
    pub log_homology_bound: BoundedReal,
    pub log_p_threshold: BoundedReal,
    pub soule: SouleLogBound,
    pub alpha: f64,
    pub delta: f64,
}

/// Computes the torsion threshold report for one field and degree.
///
/// The threshold is `max(homology bound, ln gamma)`: the transfer step
/// needs the constant to be at least `ln gamma`, so the floor is raised
/// when the volume term is small.  Requires `n >= 2`; zeta failures are
/// propagated.
pub fn ktheory_threshold(
    field: ImagQuadField,
    n: u32,
    consts: GelanderConstants,
    target_error: f64,
) -> Result<BoundReport, BoundsError> {
    let soule = soule_log_bound(field, n)?;
    let big_n = 2 * n + 1;
    let gamma = minkowski_gamma(2, big_n);
    // The level of the torsion-free congruence subgroup must be at least
    // (n + 1) / 2; the order of GL_{2N}(F_3) clears that by an enormous
    // margin, but the check guards future parameter changes.
    assert!(
        &gamma * 2 >= BigInt::from(u64::from(n) + 1),
        "gamma must be at least (n + 1) / 2"
    );
    let log_gamma = log_of_big(&gamma);
    let volume = prasad_log_volume(field, big_n, target_error)?;
    let homology = log_constants(consts, n) + log_gamma + volume;
    let threshold = interval_max(homology, log_gamma);
    Ok(BoundReport {
        field,
        n,
        big_n,
        gamma,
        log_volume: volume,
        log_homology_bound: homology,
        log_p_threshold: threshold,
        soule,
        alpha: consts.alpha,
        delta: consts.delta,
    })
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundReport", 13)?;
        s.serialize_field("m", &self.field.m())?;
        s.serialize_field("discriminant", &self.field.discriminant())?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("N", &self.big_n)?;
        s.serialize_field("gamma", &self.gamma.to_string())?;
        s.serialize_field("log_volume", &self.log_volume)?;
        s.serialize_field("log_homology_bound", &self.log_homology_bound)?;
        s.serialize_field("log_p_threshold", &self.log_p_threshold)?;
        s.serialize_field("soule_log_exponent", &self.soule.exponent())?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("delta", &self.delta)?;
        s.serialize_field("excluded_primes", "p <= gamma")?;
        s.serialize_field("disclaimer", DISCLAIMER)?;
        s.end()
    }
}
