//! Exact determinants (Bareiss fraction-free elimination) and determinantal
//! divisors by exhaustive minor enumeration. The latter serves as the
//! independent oracle for the Smith normal form.

use super::{IntMatrix, LinalgError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact determinant of a square matrix.
pub fn det(a: &IntMatrix) -> Result<BigInt, LinalgError> {
    if a.rows() != a.cols() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)).div_exact(&prev);
                m.set(i, j, v);
            }
            m.set(i, k, BigInt::zero());
        }
        prev = m.get(k, k).clone();
    }
    let d = m.get(n - 1, n - 1).clone();
    Ok(if sign < 0 { -d } else { d })
}

trait DivExact {
    fn div_exact(&self, d: &BigInt) -> BigInt;
}

impl DivExact for BigInt {
    fn div_exact(&self, d: &BigInt) -> BigInt {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "Bareiss division must be exact");
        q
    }
}

/// gcd of all k-by-k minors (zero when every minor vanishes).
pub fn determinantal_divisor(a: &IntMatrix, k: usize) -> Result<BigInt, LinalgError> {
    if k == 0 || k > a.rows().min(a.cols()) {
        return Err(LinalgError::BadMinorOrder {
            k,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut g = BigInt::zero();
    let mut row_sel = first_combination(k);
    loop {
        let mut col_sel = first_combination(k);
        loop {
            let sub = submatrix(a, &row_sel, &col_sel);
            let d = det(&sub)?;
            g = g.gcd(&d);
            if g.is_one() {
                return Ok(g);
            }
            if !next_combination(&mut col_sel, a.cols()) {
                break;
            }
        }
        if !next_combination(&mut row_sel, a.rows()) {
            break;
        }
    }
    Ok(g)
}

fn submatrix(a: &IntMatrix, rows: &[usize], cols: &[usize]) -> IntMatrix {
    let mut s = IntMatrix::zeros(rows.len(), cols.len());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            s.set(i, j, a.get(r, c).clone());
        }
    }
    s
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Advance a strictly-increasing index selection; false when exhausted.
fn next_combination(sel: &mut [usize], n: usize) -> bool {
    let k = sel.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if sel[i] < n - (k - i) {
            sel[i] += 1;
            for j in i + 1..k {
                sel[j] = sel[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
