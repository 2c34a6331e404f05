//! Exact rational scalars.
//!
//! Coordinates, line coefficients and transform entries are all
//! arbitrary-precision rationals kept in lowest terms with a positive
//! denominator, so equality and ordering are exact and every geometric
//! predicate built on them is decidable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::GeomError;

/// Arbitrary-precision rational, always reduced, denominator > 0.
///
/// `BigRational` maintains exactly that normal form, so it is used directly.
pub type Rational = BigRational;

/// Shorthand constructor used throughout tests and fixtures.
///
/// Panics when `denom == 0`; use [`try_rational`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "rational with zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Whole-number rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Checked constructor from big integers.
pub fn try_rational(numer: BigInt, denom: BigInt) -> Result<Rational, GeomError> {
    if denom.is_zero() {
        return Err(GeomError::ZeroDenominator);
    }
    Ok(Rational::new(numer, denom))
}

/// Parses `p`, `-p`, `p/q` or `-p/q`.
///
/// The denominator may carry a sign (it is normalized away) but must be
/// nonzero. This never panics, unlike `BigRational`'s `FromStr` on some
/// inputs, and it maps failures onto [`GeomError`].
pub fn parse_rational(text: &str) -> Result<Rational, GeomError> {
    let malformed = || GeomError::MalformedRational(text.to_string());
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .ok_or_else(malformed)?
        .parse()
        .map_err(|_| malformed())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.parse().map_err(|_| malformed())?,
        None => BigInt::from(1),
    };
    try_rational(numer, denom)
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
///
/// This is `BigRational`'s own `Display`, pinned here because the shape
/// file format and the JSON reports both round-trip through it.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}
