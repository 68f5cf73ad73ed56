//! Exact decision procedures for the monotone properties of solutions to
//! `a_{n+2} - a a_{n+1} + b a_n = 0` with rational coefficients.
//!
//! Everything numeric is generic over [`Scalar`]; the aliases below fix the
//! scalar to arbitrary-precision rationals, which is the only instance on
//! which the decisions are exact.

pub mod cli;
pub mod decisions;
pub mod error;
pub mod format;
pub mod numtheory;
pub mod oracle;
pub mod qfield;
pub mod recurrence;
pub mod regions;
pub mod riccati;
pub mod scalar;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

pub type QuadElem = qfield::Quad<Rational>;
pub type RootPair = qfield::Roots<Rational>;
pub type RecurrenceSpec = recurrence::Recurrence<Rational>;
pub type SequenceWindow = recurrence::Terms<Rational>;
pub type RatioLimit = recurrence::RatioLimit<Rational>;
pub type RiccatiOrbit = riccati::Orbit<Rational>;
pub type RasterGrid = regions::Raster<Rational>;

/// Double-precision counterparts, for display and numerical spot checks.
pub type QuadF64 = qfield::Quad<f64>;
pub type RecurrenceF64 = recurrence::Recurrence<f64>;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
