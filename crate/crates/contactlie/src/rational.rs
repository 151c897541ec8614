//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator, so equality (and in particular comparison against
//! zero) is exact. The canonical text encoding is `"p/q"` with q > 1, or
//! plain `"p"` for integers; that is what every JSON interface emits.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` with machine-integer inputs. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p"` or `"p/q"` (optional leading `-` on either part, no
/// whitespace). The result is normalized to lowest terms with positive
/// denominator regardless of how the input was written.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let invalid = || ParseRationalError::Invalid(s.to_string());
    let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit() || b == b'-') {
            return Err(invalid());
        }
        part.parse::<BigInt>().map_err(|_| invalid())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` with q > 1 otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True iff `q` is a (positive or negative) integer.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Exact square root of a non-negative rational, when one exists.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    let cand = Rational::new(num, den);
    if &(&cand * &cand) == q {
        Some(cand)
    } else {
        None
    }
}
