//! Log-volume estimates for the arithmetic quotients under study.
//!
//! The covolume of the principal arithmetic subgroup of `SL_N` over an
//! imaginary quadratic field factors into an archimedean part, a power of
//! the absolute discriminant, and a product of special zeta values.  All
//! three pieces are assembled in logarithmic form as midpoint-radius
//! enclosures, so the final number is an interval guaranteed to contain
//! the true log volume under the chosen normalization.

use num_bigint::BigUint;
use num_traits::One;

use crate::dd::{self, DoubleDouble};
use crate::numberfield::{zeta_product, BoundedReal, ImagQuadField, NumberFieldError};

/// Strategy for the archimedean factor of the volume formula.
///
/// This factor is the one piece whose normalization depends on delicate
/// Haar-measure conventions, so it sits behind a trait: a corrected
/// normalization can be swapped in without touching any caller.
pub trait ArchimedeanFactor {
    /// Natural log of the factor for a field of the given degree and rank
    /// parameter, together with an absolute error bound on that log.
    fn log_factor(&self, degree: u32, n_big: u32) -> (DoubleDouble, f64);
}

/// Default normalization `prod_{k=1}^{N-1} (k! / (2 pi)^{k+1})`, raised to
/// the field degree.
///
/// The factorials are accumulated exactly as one big integer, so a single
/// log evaluation carries all of the transcendental rounding.
#[derive(Debug, Clone, Copy, Default)]
pub struct FactorialNormalization;

impl ArchimedeanFactor for FactorialNormalization {
    fn log_factor(&self, degree: u32, n_big: u32) -> (DoubleDouble, f64) {
        assert!(n_big >= 2, "rank parameter must be at least 2");
        let mut factorial = BigUint::one();
        let mut superfactorial = BigUint::one();
        for k in 1..u64::from(n_big) {
            factorial *= k;
            superfactorial *= &factorial;
        }
        let (ln_sf, ln_sf_err) = DoubleDouble::ln_big(&superfactorial);
        // sum_{k=1}^{N-1} (k+1) = (N-1)(N+2)/2, the total power of 2 pi.
        let weight = (u64::from(n_big) - 1) * (u64::from(n_big) + 2) / 2;
        let two_pi_part = DoubleDouble::LN_2PI * DoubleDouble::from_u64(weight);
        let value =
            (ln_sf - two_pi_part) * DoubleDouble::from_u64(u64::from(degree));
        let d = degree as f64;
        let two_pi_err =
            weight as f64 * DoubleDouble::LN_2PI.hi() * (dd::EPS + dd::OP_REL_ERR);
        let err = d * (ln_sf_err + two_pi_err)
            + value.to_f64().abs() * 2.0 * dd::OP_REL_ERR;
        (value, err)
    }
}

/// Log of the covolume expression for the given field and rank parameter.
///
/// Combines the archimedean factor, `((N^2 - 1) / 2) ln |D_F|`, and the log
/// of the zeta product over `2..=N`.  The returned radius is dominated by
/// the requested zeta accuracy; the other terms contribute only rounding
/// at the working precision.  Fails when a zeta factor cannot be certified
/// below its cap or when the underlying series evaluation fails.
pub fn prasad_log_volume(
    field: ImagQuadField,
    n_big: u32,
    target_error: f64,
) -> Result<BoundedReal, NumberFieldError> {
    prasad_log_volume_with(&FactorialNormalization, field, n_big, target_error)
}

/// Same as [`prasad_log_volume`] with an explicit archimedean strategy.
pub fn prasad_log_volume_with<A: ArchimedeanFactor + ?Sized>(
    factor: &A,
    field: ImagQuadField,
    n_big: u32,
    target_error: f64,
) -> Result<BoundedReal, NumberFieldError> {
    assert!(n_big >= 2, "rank parameter must be at least 2");
    assert!(
        target_error > 0.0 && target_error.is_finite(),
        "target error must be positive and finite"
    );
    let (log_a, log_a_err) = factor.log_factor(field.degree(), n_big);
    let archimedean = BoundedReal::new(log_a, log_a_err);
    let discriminant_term = discriminant_power_log(field, n_big);
    let zeta_term = zeta_product(field, n_big, target_error)?.ln()?;
    Ok(archimedean + discriminant_term + zeta_term)
}

/// `((N^2 - 1) / 2) ln |D_F|` as an enclosure; the halving is exact.
fn discriminant_power_log(field: ImagQuadField, n_big: u32) -> BoundedReal {
    let abs_disc = field.discriminant().unsigned_abs();
    let (ln_disc, ln_disc_err) = DoubleDouble::from_u64(abs_disc).ln();
    let exponent_doubled = u64::from(n_big) * u64::from(n_big) - 1;
    let value =
        (ln_disc * DoubleDouble::from_u64(exponent_doubled)).scale_pow2(-1);
    let err = 0.5 * exponent_doubled as f64 * ln_disc_err
        + value.to_f64().abs() * dd::OP_REL_ERR;
    BoundedReal::new(value, err)
}
