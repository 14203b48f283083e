//! Jet superalgebras of graded super-polynomial rings, their Hilbert
//! series, and the q-series and partition enumerators they are checked
//! against.

pub mod scalar;
pub mod combinat;
pub mod echelon;
pub mod jetquot;
pub mod models;
pub mod qseries;
pub mod superring;

use num_bigint::BigInt;

pub use scalar::{Field, Fp};

/// Exact rational scalar used by default.
pub type Rational = num_rational::BigRational;
/// Polynomial over the rationals.
pub type Polynomial = superring::Polynomial<Rational>;
/// Ring presentation over the rationals.
pub type RingSpec = superring::RingSpec<Rational>;
/// Integer coefficient type of q-series.
pub type Integer = BigInt;
/// Truncated q-series with big-integer coefficients.
pub type QSeries = qseries::Series<BigInt>;
