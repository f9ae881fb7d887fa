//! Exceptional orthogonal polynomials built from Wronskians of classical
//! orthogonal polynomials, computed exactly by four independent routes,
//! together with the Darboux-extended potentials they generate.
//!
//! The algebra is generic over the coefficient ring; the aliases below fix
//! the concrete types used throughout: exact rationals for every symbolic
//! object and a 192-bit float for transcendental evaluation.

pub mod classical;
pub mod darboux;
pub mod eop;
pub mod error;
pub mod kernel;
pub mod partitions;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use kernel::real::{BigFloat, Real};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Dense univariate polynomial over the rationals.
pub type QPoly = kernel::upoly::UniPoly<Rational>;
/// Sparse multivariate polynomial over the rationals.
pub type QMultiPoly = kernel::mpoly::MultiPoly<Rational>;
/// Second-order jet at the working extended precision.
pub type Jet = kernel::jet::Jet2<BigFloat>;
/// Second-order jet in double precision.
pub type Jet64 = kernel::jet::Jet2<f64>;
/// Dense univariate polynomial with double-precision coefficients.
pub type F64Poly = kernel::upoly::UniPoly<f64>;
/// Dense univariate polynomial with single-precision coefficients.
pub type F32Poly = kernel::upoly::UniPoly<f32>;
