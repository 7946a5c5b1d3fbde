//! Exact Hurwitz numbers for almost simple coverings of the sphere.
//!
//! Three independent routes are provided and cross-checked:
//!
//! * [`oracle`] counts transitive ordered factorizations into
//!   transpositions directly (brute force and a class-vector DP).
//! * [`engine`] solves the symmetrized cut-and-join equation for the
//!   series `Psi_m^(g)` in the variables `y_i = (1 - w_i)^{-1}` and
//!   extracts the symmetric polynomial `f_m^(g)`.
//! * [`formulas`] holds closed forms, recurrences and the tabulated
//!   polynomials.
//!
//! All arithmetic is exact.

pub mod algebra;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod oracle;
pub mod partition;

pub use algebra::scalar::Rational;
pub use error::{HurwitzError, Result};
pub use partition::Partition;

/// Polynomial in the `y_i`.
pub type YPoly = algebra::SparsePoly<Rational>;
/// Polynomial in the elementary symmetric functions `e_1..e_m`.
pub type EPoly = algebra::SparsePoly<Rational>;
/// Truncated series with rational coefficients.
pub type RSeries = algebra::TruncSeries<Rational>;
