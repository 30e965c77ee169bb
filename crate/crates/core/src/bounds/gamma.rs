//! Order of the general linear group over the field with three elements.
//!
//! `GL_{Nd}(F_3)` acts on the reduction of a lattice mod 3, and its order
//! caps the torsion primes that survive the transfer argument.  The order
//! is computed exactly as a big integer; downstream consumers take its
//! logarithm with a tracked error bound.

use num_bigint::BigInt;
use num_traits::One;

/// Exact order of `GL_{Nd}(F_3)`, namely `prod_{i=0}^{Nd-1} (3^{Nd} - 3^i)`.
///
/// `d` is the degree of the field over the rationals and `n_big` the rank
/// parameter, so the matrices act in dimension `N * d`.  Both must be
/// positive and `n_big >= 2`; violating either is a programming error.
pub fn minkowski_gamma(d: u32, n_big: u32) -> BigInt {
    assert!(d >= 1, "degree must be positive");
    assert!(n_big >= 2, "rank parameter must be at least 2");
    let size = (d as u64) * (n_big as u64);
    let three = BigInt::from(3u32);
    let top = three.pow(size.try_into().expect("dimension fits in u32"));
    let mut power = BigInt::one();
    let mut order = BigInt::one();
    for _ in 0..size {
        order *= &top - &power;
        power *= &three;
    }
    order
}
