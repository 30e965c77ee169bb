//! Face-closed simplicial complexes and exact integral homology.
//!
//! Basis convention: the n-chains are ordered by the lexicographic order of
//! their vertex lists, and the boundary of a simplex alternates signs over
//! omitted vertices. Homology is unreduced (a point has Betti number 1 in
//! degree 0). Torsion comes from the Smith normal form of the next boundary
//! matrix.

mod complex;
pub mod fixtures;
mod gabber;
mod homology;
mod random;

pub use complex::{ComplexProfile, SimplicialComplex};
pub use gabber::{binomial, counting_log_bound, gabber_log_bound, simplex_count_within_cap};
pub use homology::{boundary_matrix, homology, HomologyGroup};
pub use random::random_complex;

use crate::exact_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("vertex index {index} out of range for {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },
    #[error("simplex {simplex:?} is not strictly increasing")]
    NotStrictlyIncreasing { simplex: Vec<usize> },
    #[error("empty simplex")]
    EmptySimplex,
    #[error("simplex with {len} vertices exceeds the supported maximum of {max}")]
    SimplexTooLarge { len: usize, max: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
