//! Exact arithmetic: rationals, sparse multivariate polynomials, truncated
//! power series and fraction-free linear algebra over polynomial rings.

mod gcd;
mod matrix;
pub mod modp;
mod parse;
mod poly;
mod series;

pub use gcd::{content_free, gcd, gcd_many};
pub use matrix::{det_rational, integer_rank_and_kernel, PolyMatrix, RankKernel};
pub use poly::{Monomial, MultiPoly, Ring};
pub use series::TruncSeries;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-7/4"` and similar.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::parse(t, "not a rational number");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(Error::parse(t, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}
