//! Exact rational helpers shared by every other module.
//!
//! The nearest-integer norm `‖x‖` (distance from a real to the closest
//! integer) is the basic error measure for rational approximation with
//! denominator `q`; here it is computed exactly.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator by every constructor and operation.
pub type Rational = BigRational;

/// `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Exactly `1/2`.
pub fn one_half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// `2^{-m}` as a rational.
pub fn pow2_neg(m: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << m)
}

/// `base^exp` for nonnegative big bases.
pub fn big_pow(base: &BigInt, exp: u32) -> BigInt {
    Pow::pow(base, exp)
}

/// Distance from `x` to the nearest integer; always in `[0, 1/2]`.
///
/// Half-integers are at distance exactly `1/2`; only the distance is exposed,
/// so no tie-breaking rule is involved here.
pub fn nearest_int_distance(x: &Rational) -> Rational {
    let frac = x - x.floor();
    let complement = Rational::one() - &frac;
    if frac <= complement {
        frac
    } else {
        complement
    }
}

/// Nearest integer to `x`; exact halves round to the even neighbour, so the
/// result is deterministic for every input.
pub fn round_ties_even(x: &Rational) -> BigInt {
    let floor = x.floor().to_integer();
    let frac = x - Rational::from(floor.clone());
    let half = one_half();
    if frac < half {
        floor
    } else if frac > half {
        floor + 1
    } else if floor.is_even() {
        floor
    } else {
        floor + 1
    }
}

/// Error produced by [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty numeric string")]
    Empty,
    #[error("not a decimal or fraction: `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"6"`, `"6.5"`, `"-0.25"` or `"13/2"` into an exact rational.
///
/// Decimal strings convert exactly (`"6.5"` becomes `13/2`); binary floating
/// point is never involved.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((n, d)) = t.split_once('/') {
        let num: BigInt = n
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(t.to_string()))?;
        let den: BigInt = d
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(t.to_string()))?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(t.to_string()));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRationalError::Invalid(t.to_string()));
    }
    let all_digits = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(ParseRationalError::Invalid(t.to_string()));
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let mut num: BigInt = digits
        .parse()
        .map_err(|_| ParseRationalError::Invalid(t.to_string()))?;
    if negative {
        num = -num;
    }
    let den = big_pow(&BigInt::from(10), frac_part.len() as u32);
    Ok(Rational::new(num, den))
}
