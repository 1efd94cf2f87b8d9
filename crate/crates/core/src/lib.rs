//! Exact-arithmetic tropical geometry.
//!
//! Everything here works over the max-plus semifield with exact rational
//! data, so corner loci, multiplicities and divisor classes are computed
//! without tolerances.
//!
//! - [`semiring`]: scalars of `R ∪ {-∞}` with `max` and `+`.
//! - [`polynomial`]: tropical Laurent polynomials, Newton polytopes, active terms.
//! - [`planecurve`]: corner loci of two-variable polynomials, balancing,
//!   degree and stable intersection.
//! - [`metricgraph`]: metric graphs, divisors, chip-firing, rank, Riemann-Roch,
//!   modifications.
//! - [`jacobian`]: period matrices and the Abel-Jacobi map.
//! - [`enumeration`]: floor diagrams, curve counts, cross-ratios on trees.
//! - [`cli`]: the `tropkit` batch front end.

pub mod cli;
pub mod enumeration;
mod error;
pub mod io;
pub mod jacobian;
pub mod linalg;
pub mod metricgraph;
pub mod planecurve;
pub mod polynomial;
pub mod polytope;
pub mod rational;
pub mod semiring;

pub use error::{Error, Result};
pub use rational::Rational;
pub use semiring::TropicalScalar;
