//! Helpers around the exact rational type.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-1.25"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = format!("{whole_digits}{frac}");
        let n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = BigRational::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| bad())
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

/// Superfactorial `0! 1! ... (m-1)!`, the constant relating alternant ratios
/// to Wronskians.
pub fn superfactorial(m: usize) -> BigRational {
    (1..m as u64).fold(BigRational::one(), |acc, j| acc * factorial(j))
}

/// Binomial coefficient `C(n, k)` for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}

/// Closest rational to `x` with denominator `2^20`; used for sample points.
pub fn from_f64_approx(x: f64) -> BigRational {
    let scale = 1i64 << 20;
    q((x * scale as f64).round() as i64, scale)
}

pub fn to_f64(x: &BigRational) -> f64 {
    let n = x.numer().to_f64().unwrap_or(f64::NAN);
    let d = x.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() {
        return n / d;
    }
    // Both parts overflow: shift them down together.
    let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
    let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// Sign as -1, 0 or 1.
pub fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("-1.25").unwrap(), q(-5, 4));
        assert_eq!(parse_rational("0.5").unwrap(), q(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(q(4, -6).to_string(), "-2/3");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(5), int(120));
        assert_eq!(superfactorial(4), int(12));
        assert_eq!(superfactorial(1), int(1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 5), int(0));
    }
}
