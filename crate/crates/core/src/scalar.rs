// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact rational scalars and the helpers the rest of the kernel leans on.
//!
//! Every coefficient handled by the classification code is a [`Scalar`], an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator. Text encoding is a decimal integer (`"-3"`) or a fraction
//! (`"9/2"`); decimal points and exponents are rejected so that no rounded
//! value can enter the exact pipeline.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{CyclideError, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Parses `"p"` or `"p/q"`. Floats, exponents and `+` signs are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || CyclideError::Parse(format!("not an exact rational: {text:?}"));
    match text.split_once('/') {
        None => parse_integer(text).map(Scalar::from_integer).ok_or_else(bad),
        Some((num, den)) => {
            let num = parse_integer(num).ok_or_else(bad)?;
            if den.starts_with('-') {
                return Err(bad());
            }
            let den = parse_integer(den).ok_or_else(bad)?;
            if den.is_zero() {
                return Err(CyclideError::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(num, den))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Exact square root when `value` is the square of a rational.
pub fn rational_sqrt(value: &Scalar) -> Option<Scalar> {
    if value.is_negative() {
        return None;
    }
    let num = value.numer().sqrt();
    let den = value.denom().sqrt();
    if &(&num * &num) == value.numer() && &(&den * &den) == value.denom() {
        Some(Scalar::new(num, den))
    } else {
        None
    }
}

pub fn to_f64(value: &Scalar) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn square(value: &Scalar) -> Scalar {
    value * value
}
