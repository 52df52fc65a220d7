//! Exact rational scalars.
//!
//! Everything that can influence a verdict is computed over `BigRational`,
//! which keeps values in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;

pub use num_rational::BigRational as Rational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Formats as `num/den`, always with an explicit denominator (`-1/1`, `0/1`).
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `n`, `-n`, or `n/d`. Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub(crate) fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3/2"), Some(ratio(3, 2)));
        assert_eq!(parse_rational(" -4 "), Some(int(-4)));
        assert_eq!(parse_rational("6/-4"), Some(ratio(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn fraction_string_keeps_denominator() {
        assert_eq!(to_fraction_string(&int(-1)), "-1/1");
        assert_eq!(to_fraction_string(&ratio(4, 6)), "2/3");
        assert_eq!(to_fraction_string(&Rational::zero()), "0/1");
    }
}
