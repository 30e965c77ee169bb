//! Smith normal form by repeated pivoting on a minimal-absolute-value entry.
//!
//! Only the invariant factors are produced; the unimodular transforms are not
//! accumulated. Coefficient growth is guarded by a budget on the aggregate
//! bit size of the working matrix.

use super::{IntMatrix, LinalgError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Resource guard for elimination; the default allows 2^20 aggregate bits.
#[derive(Clone, Copy, Debug)]
pub struct SnfBudget {
    pub max_total_bits: u64,
}

impl Default for SnfBudget {
    fn default() -> Self {
        Self {
            max_total_bits: 1 << 20,
        }
    }
}

/// Invariant factors d_1 | d_2 | ... | d_r, all positive, and the rank r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithForm, LinalgError> {
    smith_normal_form_with_budget(a, &SnfBudget::default())
}

pub fn smith_normal_form_with_budget(
    a: &IntMatrix,
    budget: &SnfBudget,
) -> Result<SmithForm, LinalgError> {
    let mut b = a.clone();
    let (r, c) = (b.rows(), b.cols());
    let mut factors = Vec::new();

    for t in 0..r.min(c) {
        check_budget(&b, budget)?;
        let Some((pi, pj)) = min_abs_entry(&b, t) else {
            break;
        };
        b.swap_rows(t, pi);
        b.swap_cols(t, pj);

        loop {
            check_budget(&b, budget)?;
            if !clear_column(&mut b, t) {
                continue;
            }
            if !clear_row(&mut b, t) {
                continue;
            }
            // pivot must divide the whole remaining submatrix
            if let Some(i) = find_nondivisible_row(&b, t) {
                b.row_add(t, i);
                continue;
            }
            break;
        }
        factors.push(b.get(t, t).abs());
    }

    let rank = factors.len();
    Ok(SmithForm {
        invariant_factors: factors,
        rank,
    })
}

fn check_budget(b: &IntMatrix, budget: &SnfBudget) -> Result<(), LinalgError> {
    let bits = b.total_bits();
    if bits > budget.max_total_bits {
        return Err(LinalgError::ResourceBudget {
            bits,
            budget: budget.max_total_bits,
        });
    }
    Ok(())
}

fn min_abs_entry(b: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..b.rows() {
        for j in t..b.cols() {
            let v = b.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if b.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Quotient rounded to nearest so the remainder magnitude is at most |b|/2.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_positive()) == (b.is_positive()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Reduce entries below the pivot; returns false if a smaller remainder was
/// promoted to the pivot position (elimination must restart).
fn clear_column(b: &mut IntMatrix, t: usize) -> bool {
    for i in t + 1..b.rows() {
        if b.get(i, t).is_zero() {
            continue;
        }
        let q = rounded_div(b.get(i, t), b.get(t, t));
        b.row_sub_mul(i, t, &q);
        if !b.get(i, t).is_zero() {
            b.swap_rows(t, i);
            return false;
        }
    }
    true
}

fn clear_row(b: &mut IntMatrix, t: usize) -> bool {
    for j in t + 1..b.cols() {
        if b.get(t, j).is_zero() {
            continue;
        }
        let q = rounded_div(b.get(t, j), b.get(t, t));
        b.col_sub_mul(j, t, &q);
        if !b.get(t, j).is_zero() {
            b.swap_cols(t, j);
            return false;
        }
    }
    true
}

fn find_nondivisible_row(b: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = b.get(t, t);
    for i in t + 1..b.rows() {
        for j in t + 1..b.cols() {
            if !b.get(i, j).mod_floor(pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}
