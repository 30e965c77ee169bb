//! Upper bounds for the torsion of simplicial homology.
//!
//! The torsion subgroup of H_n is a quotient of a subgroup of the n-chains,
//! and its order is at most sqrt(n+2) per n-simplex. Combined with a
//! counting argument (every n-simplex lies in the star of each of its n+1
//! vertices, each star holding at most C(delta, n) of them), this bounds
//! log torsion purely in terms of the vertex count and maximum degree.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::SimplicialComplex;

/// Log of the torsion bound sqrt(n+2)^(number of n-simplices).
pub fn gabber_log_bound(k: &SimplicialComplex, n: usize) -> f64 {
    k.simplex_count(n) as f64 * 0.5 * ((n + 2) as f64).ln()
}

/// Degree-based torsion bounds for any complex on `v` vertices with
/// 1-skeleton degree at most `delta`.
///
/// Returns the pair
/// `(v/(n+1) * C(delta, n) * log sqrt(n+2), v * delta^n)`:
/// the first entry is the log torsion bound through the sharp simplex-count
/// cap, the second is the cruder simplex-count cap itself. The first never
/// exceeds the second when `delta >= n >= 1`.
pub fn counting_log_bound(delta: usize, v: usize, n: usize) -> (f64, f64) {
    let cap = binomial(delta, n).to_f64().unwrap_or(f64::INFINITY) * v as f64 / (n + 1) as f64;
    let fine = cap * 0.5 * ((n + 2) as f64).ln();
    let coarse = v as f64 * (delta as f64).powi(n as i32);
    (fine, coarse)
}

/// Exact check of the simplex-count cap
/// `(number of n-simplices) <= v/(n+1) * C(delta, n)`
/// with `delta` and `v` taken from the complex profile, in integers
/// (both sides multiplied by n+1), so no rounding is involved.
pub fn simplex_count_within_cap(k: &SimplicialComplex, n: usize) -> bool {
    let p = k.profile();
    let lhs = BigUint::from(k.simplex_count(n)) * BigUint::from(n + 1);
    let rhs = BigUint::from(p.v) * binomial(p.delta, n);
    lhs <= rhs
}

/// Binomial coefficient C(a, b) as an exact integer (0 when b > a).
pub fn binomial(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::from(1u32);
    for i in 0..b {
        // The running product of i+1 consecutive ratios is an integer.
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}
