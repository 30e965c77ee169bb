use serde::Serialize;

use super::NumberFieldError;

/// The imaginary quadratic field Q(sqrt(m)) for squarefree m < 0.
///
/// The discriminant is m itself when m = 1 mod 4 and 4m otherwise, and the
/// unit group is finite of order 6 (discriminant -3), 4 (discriminant -4),
/// or 2 (all other fields).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImagQuadField {
    m: i64,
    discriminant: i64,
    unit_order: u32,
}

impl ImagQuadField {
    pub fn new(m: i64) -> Result<Self, NumberFieldError> {
        if m >= 0 {
            return Err(NumberFieldError::NotNegative { m });
        }
        if m < i64::MIN / 4 {
            return Err(NumberFieldError::TooLarge { m });
        }
        if !is_squarefree(m.unsigned_abs()) {
            return Err(NumberFieldError::NotSquarefree { m });
        }
        let discriminant = if m.rem_euclid(4) == 1 { m } else { 4 * m };
        let unit_order = match discriminant {
            -3 => 6,
            -4 => 4,
            _ => 2,
        };
        Ok(ImagQuadField {
            m,
            discriminant,
            unit_order,
        })
    }

    /// The squarefree integer under the radical.
    pub fn m(self) -> i64 {
        self.m
    }

    /// The field discriminant (always negative here).
    pub fn discriminant(self) -> i64 {
        self.discriminant
    }

    /// Order of the unit group of the ring of integers (2, 4, or 6).
    pub fn unit_order(self) -> u32 {
        self.unit_order
    }

    /// Degree over the rationals; always 2 for this type.
    pub fn degree(self) -> u32 {
        2
    }
}

/// All imaginary quadratic fields with |discriminant| <= `bound`, in order
/// of increasing |discriminant|.
pub fn fields_with_abs_discriminant_up_to(bound: u64) -> Vec<ImagQuadField> {
    let cap = i64::try_from(bound).unwrap_or(i64::MAX);
    let mut fields: Vec<ImagQuadField> = (1..=cap)
        .filter_map(|k| ImagQuadField::new(-k).ok())
        .filter(|f| f.discriminant().unsigned_abs() <= bound)
        .collect();
    fields.sort_by_key(|f| f.discriminant().unsigned_abs());
    fields
}

pub(crate) fn is_squarefree(x: u64) -> bool {
    if x == 0 {
        return false;
    }
    let mut d = 2u64;
    while let Some(sq) = d.checked_mul(d) {
        if sq > x {
            break;
        }
        if x.is_multiple_of(sq) {
            return false;
        }
        d += 1;
    }
    true
}
