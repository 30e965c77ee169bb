//! Exact linear algebra over the integers with arbitrary-precision entries.
//!
//! The Smith normal form routine is the workhorse; `determinantal_divisor`
//! provides an independent route to the same invariant factors (the product
//! of the first k factors equals the gcd of all k-by-k minors), and `rank`
//! uses fraction-free elimination rather than the Smith pipeline so the two
//! can be checked against each other.

mod matrix;
mod minors;
mod rank;
mod snf;

pub use matrix::IntMatrix;
pub use minors::{det, determinantal_divisor};
pub use rank::{kernel_basis, rank};
pub use snf::{smith_normal_form, smith_normal_form_with_budget, SmithForm, SnfBudget};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("dimension mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("minor order {k} out of range for a {rows}x{cols} matrix")]
    BadMinorOrder { k: usize, rows: usize, cols: usize },
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("aggregate entry size {bits} bits exceeds the budget of {budget} bits")]
    ResourceBudget { bits: u64, budget: u64 },
}
