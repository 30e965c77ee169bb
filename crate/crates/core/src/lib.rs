//! Exact and rigorously-bounded computations behind explicit torsion bounds
//! for the K-theory of imaginary quadratic fields:
//!
//! * [`exact_linalg`]: arbitrary-precision integer matrices, Smith normal
//!   form, ranks, and determinantal divisors.
//! * [`simplicial`]: face-closed simplicial complexes, integral homology with
//!   torsion, and simplex-count/torsion-size bounds.
//! * [`numberfield`]: imaginary quadratic fields, Kronecker characters, and
//!   Dedekind zeta values with explicit error radii.
//! * [`bounds`]: Minkowski-style index bounds, Prasad volume terms, and the
//!   composed prime-exclusion thresholds with a comparison against the
//!   earlier general-purpose bound.
//!
//! All floating-point quantities that enter a bound are tracked as a value
//! plus a proven absolute error radius; integer computations are exact.

pub mod bounds;
pub mod dd;
pub mod exact_linalg;
pub mod numberfield;
pub mod simplicial;

pub use bounds::{BoundReport, GelanderConstants};
pub use dd::DoubleDouble;
pub use exact_linalg::{IntMatrix, SmithForm, SnfBudget};
pub use numberfield::{BoundedReal, ImagQuadField};
pub use simplicial::{ComplexProfile, HomologyGroup, SimplicialComplex};
