use super::NumberFieldError;

/// Whether `d` is a fundamental discriminant: either d = 1 mod 4 and
/// squarefree, or d = 4m with m = 2 or 3 mod 4 and m squarefree. The
/// trivial case d = 1 is excluded.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree_abs(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree_abs(m)
        }
        _ => false,
    }
}

/// The Kronecker symbol (d/k) of a fundamental discriminant, the quadratic
/// character mod |d| attached to the field of discriminant d.
///
/// Completely multiplicative in k, periodic with period |d|, and zero
/// exactly on the k sharing a factor with d.
pub fn kronecker_chi(d: i64, k: u64) -> Result<i8, NumberFieldError> {
    if !is_fundamental_discriminant(d) {
        return Err(NumberFieldError::NotFundamental { d });
    }
    Ok(kronecker_raw(d, k))
}

/// Kronecker symbol (a/n) for arbitrary a and n >= 0, by the standard
/// reciprocity algorithm. No validation; callers wanting the character of a
/// field go through [`kronecker_chi`].
pub(crate) fn kronecker_raw(a: i64, n: u64) -> i8 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut n = n;
    let mut result: i8 = 1;
    // Factor 2s out of n; each contributes (a/2), which is zero for even a
    // and otherwise depends on a mod 8.
    while n.is_multiple_of(2) {
        n /= 2;
        if a % 2 == 0 {
            return 0;
        }
        if matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // n is odd now, so the symbol only depends on a mod n; reduce to a
    // nonnegative representative and run Jacobi reciprocity.
    debug_assert!(n <= i64::MAX as u64);
    let mut a = a.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn squarefree_abs(x: i64) -> bool {
    super::field::is_squarefree(x.unsigned_abs())
}
