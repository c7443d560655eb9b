//! Numerical continuation and invariant-manifold toolkit for Sandstede's
//! three-dimensional homoclinic-flip model.
//!
//! The crate is organized around a small set of building blocks:
//!
//! * [`model`] — the polynomial vector field, its Jacobian, equilibria and
//!   eigenvalue classification of flip cases,
//! * [`compactify`] — Poincare compactification onto the ball of radius two,
//!   coordinate charts and the induced dynamics at infinity,
//! * [`integrate`] — adaptive Runge-Kutta integration with event detection,
//!   used as the oracle layer and for one-dimensional manifolds,
//! * [`bvp`] — orthogonal-collocation two-point boundary value solver for
//!   orbit segments, with mesh adaptation and Floquet analysis,
//! * [`continuation`] — pseudo-arclength continuation of periodic, homoclinic
//!   and heteroclinic solutions, with test functions for SNP, PD, CC and flips,
//! * [`manifolds`] — two-dimensional manifolds as families of orbit segments,
//!   intersection sets with spheres, tubes and planes, and basin sections,
//! * [`presets`] — the two study scenarios and their table of representative
//!   parameter values.

pub mod bvp;
pub mod compactify;
pub mod continuation;
pub mod error;
pub mod integrate;
pub mod linalg;
pub mod manifolds;
pub mod model;
pub mod presets;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
