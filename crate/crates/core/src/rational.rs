//! Exact rational arithmetic for edge lengths, heights and critical radii.
//!
//! All comparisons against critical values are discontinuous in `h`, so the
//! whole combinatorial side of the crate works over arbitrary-precision
//! rationals and never rounds. Floats only appear at the geometry/grid layer.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parses a rational literal: `p/q`, an integer, or a decimal string.
/// Decimal strings are read exactly in base 10 (`"0.5"` is 1/2, not a float).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::ParseRational(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.starts_with('-');
        let int_digits = int_part
            .strip_prefix(['-', '+'])
            .unwrap_or(int_part);
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(err());
        }
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().map_err(|_| err())?
        };
        let frac_val: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().map_err(|_| err())?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = Rational::new(int_val * &scale + frac_val, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

/// Canonical `p/q` form (`"0/1"`, `"-1/3"`, ...). The inverse of
/// [`parse_rational`] on its own output.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

pub fn rational_from_u64(n: u64, d: u64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Binomial coefficient in u64; callers stay within k <= 24 where C(24, 12)
/// is far below overflow.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn biguint_to_string(b: &BigUint) -> String {
    b.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_forms() {
        assert_eq!(parse_rational("1/3").unwrap(), rational_from_u64(1, 3));
        assert_eq!(parse_rational("-2/4").unwrap(), -rational_from_u64(1, 2));
        assert_eq!(parse_rational(" 7 / 2 ").unwrap(), rational_from_u64(7, 2));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.5").unwrap(), rational_from_u64(1, 2));
        assert_eq!(parse_rational(".25").unwrap(), rational_from_u64(1, 4));
        assert_eq!(parse_rational("-0.125").unwrap(), -rational_from_u64(1, 8));
        assert_eq!(parse_rational("2").unwrap(), rational_from_u64(2, 1));
        // 0.1 is exactly 1/10, which no binary float can represent.
        assert_eq!(parse_rational("0.1").unwrap(), rational_from_u64(1, 10));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1.2.3", "--3", "1e5", "."] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn formats_canonically() {
        let r = parse_rational("6/8").unwrap();
        assert_eq!(format_rational(&r), "3/4");
        assert_eq!(format_rational(&Rational::zero()), "0/1");
        assert_eq!(
            parse_rational(&format_rational(&-rational_from_u64(5, 10))).unwrap(),
            -rational_from_u64(1, 2)
        );
    }

    #[test]
    fn binomial_row_six() {
        let row: Vec<u64> = (0..=6).map(|j| binomial(6, j)).collect();
        assert_eq!(row, vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(binomial(3, 5), 0);
    }
}
