//! Exact computations for two-dimensional theories built by the universal
//! construction, symmetric and supersymmetric Schur functions, foam
//! evaluations and Toeplitz determinants of rational Laurent series.
//!
//! Everything is exact: scalars are [`Rational`]s and symbolic values are
//! [`MultiPoly`]s over a named [`Ring`].

pub mod cobord;
pub mod day;
pub mod error;
pub mod exact;
pub mod foam;
pub mod symfun;
pub mod theory;

pub use cobord::{Cobordism, GramReport};
pub use error::{Error, Result};
pub use exact::{MultiPoly, PolyMatrix, Rational, Ring, TruncSeries};
pub use foam::DayFoamInstance;
pub use symfun::{HookDecomposition, Partition};
pub use theory::{RecurrenceFit, TheorySpec};
