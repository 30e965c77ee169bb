//! The classical discriminant-power bounds and the head-to-head table.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::numberfield::{BoundedReal, ImagQuadField};

use super::threshold::{ktheory_threshold, GelanderConstants};
use super::BoundsError;

/// Accuracy used for the zeta enclosures when the caller does not pick one.
/// The winner margins are tens of orders of magnitude, so the exact value
/// only affects the reported radii.
const DEFAULT_ACCURACY: f64 = 1e-9;

/// The classical bound `|D_F|^(1120 n^4 ln n)` on the log of the torsion
/// order, kept as a base and exponent.
///
/// The represented number overflows every float format for interesting
/// parameters (already around `10^7477` at `n = 2`, `|D_F| = 4`), so only
/// its logarithm is ever materialized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SouleLogBound {
    base: u64,
    exponent: f64,
}

impl SouleLogBound {
    /// The absolute discriminant serving as the base.
    pub fn base(self) -> u64 {
        self.base
    }

    /// `1120 n^4 ln n`.
    pub fn exponent(self) -> f64 {
        self.exponent
    }

    /// Natural log of the represented bound: `exponent * ln base`.
    pub fn ln_value(self) -> f64 {
        self.exponent * (self.base as f64).ln()
    }
}

/// The classical bound on `ln |tors K_n|` in `(base, exponent)` form.
///
/// Rejects `n < 2`, where the exponent degenerates because `ln n <= 0`.
pub fn soule_log_bound(
    field: ImagQuadField,
    n: u32,
) -> Result<SouleLogBound, BoundsError> {
    if n < 2 {
        return Err(BoundsError::SouleRange { n });
    }
    let quartic = u64::from(n).pow(4);
    Ok(SouleLogBound {
        base: field.discriminant().unsigned_abs(),
        exponent: 1120.0 * quartic as f64 * f64::from(n).ln(),
    })
}

/// The classical bound `C * |D_F|^2 ln |D_F|` on the log of the order of
/// the 6-torsion-free part of the second K-group.
pub fn k2_log_bound(field: ImagQuadField, c: f64) -> f64 {
    assert!(c > 0.0 && c.is_finite(), "the constant must be positive");
    let abs_disc = field.discriminant().unsigned_abs() as f64;
    debug_assert!(abs_disc >= 3.0);
    c * abs_disc * abs_disc * abs_disc.ln()
}

/// Which of the two thresholds is smaller in a comparison row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    /// The volume-based threshold is certainly below the classical bound.
    NewBound,
    /// The classical bound could not be certified as larger.
    Soule,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::NewBound => "new",
            Winner::Soule => "soule",
        }
    }
}

impl Serialize for Winner {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// One `(n, F)` entry of the comparison table.
#[derive(Debug, Clone)]
pub struct CompareRow {
    pub n: u32,
    pub m: i64,
    pub discriminant: i64,
    pub log_p_threshold: BoundedReal,
    pub soule: SouleLogBound,
    pub winner: Winner,
}

impl Serialize for CompareRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CompareRow", 7)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("discriminant", &self.discriminant)?;
        s.serialize_field("log_p_threshold", &self.log_p_threshold)?;
        s.serialize_field("soule_base", &self.soule.base())?;
        s.serialize_field("soule_exponent", &self.soule.exponent())?;
        s.serialize_field("winner", &self.winner)?;
        s.end()
    }
}

/// Declares the new bound the winner only when its certified upper edge is
/// strictly below the classical bound on the log scale.
fn decide_winner(threshold: BoundedReal, soule: SouleLogBound) -> Winner {
    let upper = threshold.upper();
    // The threshold is at least ln gamma >= ln 48, so its log is defined.
    assert!(upper > 0.0);
    if upper.ln() < soule.ln_value() {
        Winner::NewBound
    } else {
        Winner::Soule
    }
}

/// Builds the comparison table over the cartesian product of degrees and
/// field parameters, in the given order.
pub fn compare_bounds(
    n_range: &[u32],
    m_list: &[i64],
    consts: GelanderConstants,
) -> Result<Vec<CompareRow>, BoundsError> {
    compare_bounds_with_accuracy(n_range, m_list, consts, DEFAULT_ACCURACY)
}

/// Same as [`compare_bounds`] with an explicit zeta accuracy.
pub fn compare_bounds_with_accuracy(
    n_range: &[u32],
    m_list: &[i64],
    consts: GelanderConstants,
    target_error: f64,
) -> Result<Vec<CompareRow>, BoundsError> {
    let mut rows = Vec::with_capacity(n_range.len() * m_list.len());
    for &n in n_range {
        for &m in m_list {
            let field = ImagQuadField::new(m)?;
            let report = ktheory_threshold(field, n, consts, target_error)?;
            let winner = decide_winner(report.log_p_threshold, report.soule);
            rows.push(CompareRow {
                n,
                m,
                discriminant: field.discriminant(),
                log_p_threshold: report.log_p_threshold,
                soule: report.soule,
                winner,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(m: i64) -> ImagQuadField {
        ImagQuadField::new(m).unwrap()
    }

    #[test]
    fn exponent_references() {
        let n2 = soule_log_bound(field(-1), 2).unwrap();
        assert_eq!(n2.base(), 4);
        assert!((n2.exponent() - 12_421.197_475_634_22).abs() < 1e-8);
        let n3 = soule_log_bound(field(-1), 3).unwrap();
        assert!((n3.exponent() - 99_666.106_827_970_91).abs() < 1e-7);
    }

    #[test]
    fn rejects_degenerate_degrees() {
        assert!(matches!(
            soule_log_bound(field(-1), 1),
            Err(BoundsError::SouleRange { n: 1 })
        ));
        assert!(soule_log_bound(field(-1), 0).is_err());
    }

    #[test]
    fn exponent_strictly_increasing() {
        let mut previous = 0.0;
        for n in 2..=20 {
            let exponent = soule_log_bound(field(-1), n).unwrap().exponent();
            assert!(exponent > previous);
            previous = exponent;
        }
    }

    #[test]
    fn discriminant_exponent_always_smaller_than_classical() {
        // The new bound's |D_F| exponent is 2n(n+1); the classical one is
        // 1120 n^4 ln n.
        for n in 2u64..=50 {
            let new_exponent = (2 * n * (n + 1)) as f64;
            let classical = 1120.0 * (n * n * n * n) as f64 * (n as f64).ln();
            assert!(new_exponent < classical, "n = {n}");
        }
    }

    #[test]
    fn k2_reference_and_linearity() {
        let eisenstein = field(-3);
        let base = k2_log_bound(eisenstein, 1.0);
        assert!((base - 9.0 * 3f64.ln()).abs() < 1e-12);
        let scaled = k2_log_bound(eisenstein, 2.5);
        assert!((scaled - 2.5 * base).abs() < 1e-12);
    }

    #[test]
    fn k2_ratio_constant_over_fields() {
        use crate::numberfield::fields_with_abs_discriminant_up_to;
        for f in fields_with_abs_discriminant_up_to(200) {
            let d = f.discriminant().unsigned_abs() as f64;
            let ratio = k2_log_bound(f, 0.7) / (d * d * d.ln());
            assert!((ratio - 0.7).abs() < 1e-12);
        }
    }

    #[test]
    fn table_shape_and_order() {
        let rows = compare_bounds(&[2, 3], &[-1, -3, -7], GelanderConstants::default())
            .unwrap();
        assert_eq!(rows.len(), 6);
        let coordinates: Vec<(u32, i64)> =
            rows.iter().map(|r| (r.n, r.m)).collect();
        assert_eq!(
            coordinates,
            [(2, -1), (2, -3), (2, -7), (3, -1), (3, -3), (3, -7)]
        );
        assert_eq!(rows[0].discriminant, -4);
    }

    #[test]
    fn winners_match_recomputation_and_favor_new_bound() {
        let rows = compare_bounds(&[2, 3], &[-1, -2, -3, -7, -11], GelanderConstants::default())
            .unwrap();
        for row in &rows {
            assert_eq!(row.winner, decide_winner(row.log_p_threshold, row.soule));
            // ln(threshold) is a few units; the classical log is above 1e4.
            assert_eq!(row.winner, Winner::NewBound);
        }
    }

    #[test]
    fn propagates_field_construction_failure() {
        let result = compare_bounds(&[2], &[5], GelanderConstants::default());
        assert!(result.is_err());
    }

    #[test]
    fn row_serialization_layout() {
        let rows =
            compare_bounds(&[2], &[-1], GelanderConstants::default()).unwrap();
        let json = serde_json::to_value(&rows[0]).unwrap();
        let object = json.as_object().unwrap();
        let mut keys: Vec<&str> = object.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            [
                "discriminant",
                "log_p_threshold",
                "m",
                "n",
                "soule_base",
                "soule_exponent",
                "winner"
            ]
        );
        assert_eq!(object["winner"], "new");
        assert_eq!(object["soule_base"], 4);
    }
}
