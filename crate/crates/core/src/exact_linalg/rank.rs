//! Rational rank by fraction-free elimination, and an integer kernel basis.
//! Both are routes independent of the Smith normal form pipeline.

use super::{IntMatrix, LinalgError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank over the rationals (Bareiss elimination with full pivoting).
pub fn rank(a: &IntMatrix) -> Result<usize, LinalgError> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut t = 0;
    while t < rows.min(cols) {
        // any nonzero pivot works; pick the first
        let mut pivot = None;
        'search: for i in t..rows {
            for j in t..cols {
                if !m.get(i, j).is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        for i in t + 1..rows {
            for j in t + 1..cols {
                let num = m.get(i, j) * m.get(t, t) - m.get(i, t) * m.get(t, j);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m.set(i, j, q);
            }
            m.set(i, t, BigInt::zero());
        }
        prev = m.get(t, t).clone();
        t += 1;
    }
    Ok(t)
}

/// Basis of the integer kernel as columns of a cols(A) x nullity matrix.
/// Each column is primitive (content 1) and satisfies A v = 0.
pub fn kernel_basis(a: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    let (rows, cols) = (a.rows(), a.cols());
    // reduced row echelon form over Q
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from_integer(a.get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in &mut m[r][c..] {
            let v = &*x * &inv;
            *x = v;
        }
        // Detach the pivot row so the eliminations below can borrow it
        // while mutating the other rows.
        let pivot_row = std::mem::take(&mut m[r]);
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    let v = &*x - &f * p;
                    *x = v;
                }
            }
        }
        m[r] = pivot_row;
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut out = IntMatrix::zeros(cols, free_cols.len());
    for (kidx, &f) in free_cols.iter().enumerate() {
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][f].clone();
        }
        // clear denominators and divide by content
        let mut denom_lcm = BigInt::one();
        for x in &v {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&denom_lcm / x.denom()))
            .collect();
        let mut content = BigInt::zero();
        for x in &ints {
            content = content.gcd(x);
        }
        for (i, x) in ints.into_iter().enumerate() {
            out.set(i, kidx, if content.is_zero() { x } else { x / &content });
        }
    }
    Ok(out)
}
