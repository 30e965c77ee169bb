//! Imaginary quadratic fields, their quadratic characters, and rigorously
//! error-bounded values of the Riemann, Dirichlet, and Dedekind zeta
//! functions at integer arguments s >= 2.
//!
//! Every returned value carries a proven absolute error radius. Dedekind
//! zeta values are computed through the classical factorization
//! `zeta_F(s) = zeta(s) * L(s, chi_D)` for the quadratic character of the
//! field discriminant, with direct summation plus integral or character-sum
//! tail bounds; the radii account for both truncation and rounding.

mod bounded;
mod field;
mod kronecker;
mod zeta;

pub use bounded::BoundedReal;
pub use field::{fields_with_abs_discriminant_up_to, ImagQuadField};
pub use kronecker::{is_fundamental_discriminant, kronecker_chi};
pub use zeta::{dedekind_zeta, dirichlet_l, riemann_zeta, zeta_product};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumberFieldError {
    #[error("field parameter m must be negative, got {m}")]
    NotNegative { m: i64 },
    #[error("field parameter m must be squarefree, got {m}")]
    NotSquarefree { m: i64 },
    #[error("field parameter m = {m} is too large in magnitude")]
    TooLarge { m: i64 },
    #[error("{d} is not a fundamental discriminant")]
    NotFundamental { d: i64 },
    #[error("cannot take the log of an interval touching zero (value {value:.6e}, radius {error:.3e})")]
    LogNonPositive { value: f64, error: f64 },
    #[error(
        "zeta product for discriminant {d} through N={n} reaches \
         {value_plus_error:.6} and exceeds the 2^(N-1) cap {cap}"
    )]
    ZetaCapExceeded {
        d: i64,
        n: u32,
        value_plus_error: f64,
        cap: f64,
    },
}
