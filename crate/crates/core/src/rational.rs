//! Parsing and formatting of exact rationals for the text file formats.
//!
//! Rationals are written `num/den` or as a plain integer; the denominator is
//! always kept positive and fractions are reduced.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational `{0}`")]
    Malformed(String),
}

/// Parses `"3"`, `"-3"`, or `"num/den"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut parts = text.splitn(2, '/');
    let num_part = parts.next().unwrap();
    let num: BigInt = num_part
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(num_part.to_string()))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(num)),
        Some(den_part) => {
            if den_part.contains('/') {
                return Err(ParseRationalError::Malformed(text.to_string()));
            }
            let den: BigInt = den_part
                .parse()
                .map_err(|_| ParseRationalError::BadInteger(den_part.to_string()))?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Formats a rational as `n` when integral, `n/d` otherwise.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Renders a coordinate vector as `(a, b, ...)`.
pub fn format_vector(coords: &[BigRational]) -> String {
    let parts: Vec<String> = coords.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}
