use std::ops::{Add, Mul};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::NumberFieldError;
use crate::dd::{DoubleDouble, OP_REL_ERR};

/// Extra multiplicative slack applied to every propagated radius, covering
/// the f64 rounding of the radius arithmetic itself.
const RADIUS_SLACK: f64 = 1.0 + 1e-12;

/// A real number known to lie within `error` of `value`.
///
/// `value` carries roughly 31 significant digits; `error` is an absolute
/// radius that is always a proven bound, growing under arithmetic so that
/// the true result stays inside the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundedReal {
    value: DoubleDouble,
    error: f64,
}

impl BoundedReal {
    /// Wraps a value with a caller-supplied radius.
    ///
    /// # Panics
    ///
    /// If the radius is negative, NaN, or infinite.
    pub fn new(value: DoubleDouble, error: f64) -> Self {
        assert!(
            error >= 0.0 && error.is_finite(),
            "error radius must be finite and nonnegative"
        );
        BoundedReal { value, error }
    }

    /// A value known exactly (zero radius).
    pub fn exact(value: DoubleDouble) -> Self {
        BoundedReal {
            value,
            error: 0.0,
        }
    }

    pub fn value(self) -> DoubleDouble {
        self.value
    }

    pub fn error(self) -> f64 {
        self.error
    }

    /// Natural log of the interval. Fails if the interval touches zero.
    ///
    /// The radius uses the mean value theorem: on [v-e, v+e] with v-e > 0,
    /// |ln x - ln v| <= e / (v - e).
    pub fn ln(self) -> Result<Self, NumberFieldError> {
        let v = self.value.to_f64();
        // Small deflation so the positivity check is safe against the f64
        // reading of the double-double value.  NaN fails closed.
        let low = v - v.abs() * 1e-15 - self.error;
        let certified_positive = low > 0.0;
        if !certified_positive {
            return Err(NumberFieldError::LogNonPositive {
                value: v,
                error: self.error,
            });
        }
        let (value, ln_err) = self.value.ln();
        let propagated = self.error / low;
        Ok(BoundedReal {
            value,
            error: (ln_err + propagated) * RADIUS_SLACK,
        })
    }

    /// Whether `x` lies within the interval (used by cross-check tests).
    pub fn contains(self, x: DoubleDouble) -> bool {
        let diff = (x - self.value).to_f64().abs();
        diff <= self.error + self.value.to_f64().abs() * 1e-15
    }

    /// A conservative f64 upper end of the interval.
    pub fn upper(self) -> f64 {
        let v = self.value.to_f64();
        v + self.error + v.abs() * 1e-15
    }

    /// A conservative f64 lower end of the interval.
    pub fn lower(self) -> f64 {
        let v = self.value.to_f64();
        v - self.error - v.abs() * 1e-15
    }
}

/// Interval sum; radii add, plus representation rounding.
impl Add for BoundedReal {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let value = self.value + rhs.value;
        let round = value.to_f64().abs() * OP_REL_ERR;
        BoundedReal {
            value,
            error: (self.error + rhs.error + round) * RADIUS_SLACK,
        }
    }
}

/// Interval product: |xy - vw| <= |v|·e_w + |w|·e_v + e_v·e_w, plus
/// representation rounding of the product itself.
impl Mul for BoundedReal {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let value = self.value * rhs.value;
        let a = self.value.to_f64().abs();
        let b = rhs.value.to_f64().abs();
        let cross = a * rhs.error + b * self.error + self.error * rhs.error;
        let round = value.to_f64().abs() * OP_REL_ERR;
        BoundedReal {
            value,
            error: (cross + round) * RADIUS_SLACK,
        }
    }
}

impl Serialize for BoundedReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundedReal", 2)?;
        s.serialize_field("value", &self.value.to_decimal_string(32))?;
        s.serialize_field("error", &self.error)?;
        s.end()
    }
}
