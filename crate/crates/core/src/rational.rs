//! Parsing and rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Parses `"5/7"`, `"-3/4"`, `"1"` into a reduced rational. Floats are rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Parses a comma separated list of rationals, e.g. `"5/7,2/7"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyModel);
    }
    text.split(',').map(parse_rational).collect()
}

/// `num/den` in lowest terms (integers render without a denominator).
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Decimal rendering with `places` digits, rounding half away from zero.
pub fn format_decimal(value: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = value.abs() * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = (scaled + half).floor().to_integer();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places)
    }
}

pub fn to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("5/7").unwrap(), ratio(5, 7));
        assert_eq!(parse_rational(" 10/14 ").unwrap(), ratio(5, 7));
        assert_eq!(parse_rational("1").unwrap(), ratio(1, 1));
        assert_eq!(parse_rational("-3/4").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn rejects_floats_and_zero_denominators() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational_list("1/2,,1/2").is_err());
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(format_decimal(&ratio(250, 7), 2), "35.71");
        assert_eq!(format_decimal(&ratio(1, 8), 2), "0.13");
        assert_eq!(format_decimal(&ratio(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&ratio(310, 1), 2), "310.00");
        assert_eq!(format_decimal(&ratio(7, 2), 0), "4");
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(format_rational(&ratio(10, 49)), "10/49");
        assert_eq!(format_rational(&ratio(4, 2)), "2");
    }
}
