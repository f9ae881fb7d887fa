//! Real scalars for the numeric (transcendental) side of the crate.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat as AstroFloat, Consts, Radix, RoundingMode};
use num_traits::{One, Zero};

use super::scalar::{DetRing, Scalar};
use crate::error::Result;
use crate::Rational;

/// Real number type used for gauge factors, potentials and residuals.
pub trait Real: Scalar + DetRing + PartialOrd + fmt::Display + Add<Output = Self> + Div<Output = Self> {
    fn from_rational(x: &Rational) -> Self;
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn pi() -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn sqrt(&self) -> Self;
    /// `self^e` for `self > 0`.
    fn powr(&self, e: &Self) -> Self;
    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
    fn is_finite(&self) -> bool;
    /// Scientific notation with `digits` significant digits, ties to even.
    fn to_sci(&self, digits: usize) -> String;
}

macro_rules! primitive_real {
    ($t:ident) => {
        impl Real for $t {
            fn from_rational(x: &Rational) -> Self {
                super::rational::to_f64(x) as $t
            }
            fn from_f64(x: f64) -> Self {
                x as $t
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn pi() -> Self {
                std::$t::consts::PI
            }
            fn exp(&self) -> Self {
                $t::exp(*self)
            }
            fn ln(&self) -> Self {
                $t::ln(*self)
            }
            fn sin(&self) -> Self {
                $t::sin(*self)
            }
            fn cos(&self) -> Self {
                $t::cos(*self)
            }
            fn sqrt(&self) -> Self {
                $t::sqrt(*self)
            }
            fn powr(&self, e: &Self) -> Self {
                self.powf(*e)
            }
            fn is_finite(&self) -> bool {
                $t::is_finite(*self)
            }
            fn to_sci(&self, digits: usize) -> String {
                format!("{:.*e}", digits.saturating_sub(1), self)
            }
        }
    };
}

primitive_real!(f32);
primitive_real!(f64);

/// Horner evaluation of a rational polynomial at a real point.
pub fn eval_qpoly<R: Real>(p: &crate::QPoly, x: &R) -> R {
    p.coeffs()
        .iter()
        .rev()
        .fold(R::zero(), |acc, c| acc * x.clone() + R::from_rational(c))
}

/// Significand width, in bits, of [`BigFloat`].
pub const PRECISION_BITS: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary floating point with a 192-bit significand.
#[derive(Clone)]
pub struct BigFloat(AstroFloat);

impl BigFloat {
    fn wrap(x: AstroFloat) -> Self {
        BigFloat(x)
    }

    pub fn parse(text: &str) -> Self {
        with_consts(|cc| BigFloat(AstroFloat::parse(text, Radix::Dec, PRECISION_BITS, RM, cc)))
    }

    fn powi_abs(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = BigFloat::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Full-precision decimal string.
    pub fn to_decimal_string(&self) -> String {
        with_consts(|cc| self.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(20))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.0.partial_cmp(&other.0) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:ident) => {
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat {
                BigFloat::wrap(self.0.$op(&rhs.0, PRECISION_BITS, RM))
            }
        }
        impl<'a> $tr<&'a BigFloat> for &'a BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &'a BigFloat) -> BigFloat {
                BigFloat::wrap(self.0.$op(&rhs.0, PRECISION_BITS, RM))
            }
        }
        impl<'a> $atr<&'a BigFloat> for BigFloat {
            fn $am(&mut self, rhs: &'a BigFloat) {
                self.0 = self.0.$op(&rhs.0, PRECISION_BITS, RM);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign, add);
forward_binop!(Sub, sub, SubAssign, sub_assign, sub);
forward_binop!(Mul, mul, MulAssign, mul_assign, mul);

impl Div for BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: BigFloat) -> BigFloat {
        BigFloat::wrap(self.0.div(&rhs.0, PRECISION_BITS, RM))
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat::wrap(self.0.neg())
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        BigFloat(AstroFloat::from_u8(0, PRECISION_BITS))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat(AstroFloat::from_u8(1, PRECISION_BITS))
    }
}

impl Scalar for BigFloat {
    fn from_int(n: i64) -> Self {
        BigFloat(AstroFloat::from_i64(n, PRECISION_BITS))
    }
}

impl DetRing for BigFloat {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        Ok(self.clone() / divisor.clone())
    }
}

impl Real for BigFloat {
    fn from_rational(x: &Rational) -> Self {
        let n = BigFloat::parse(&x.numer().to_string());
        if x.denom() == &num_bigint::BigInt::from(1) {
            return n;
        }
        n / BigFloat::parse(&x.denom().to_string())
    }
    fn from_f64(x: f64) -> Self {
        BigFloat(AstroFloat::from_f64(x, PRECISION_BITS))
    }
    fn to_f64(&self) -> f64 {
        self.to_sci(20).parse().unwrap_or(f64::NAN)
    }
    fn pi() -> Self {
        with_consts(|cc| BigFloat(cc.pi(PRECISION_BITS, RM)))
    }
    fn exp(&self) -> Self {
        with_consts(|cc| BigFloat(self.0.exp(PRECISION_BITS, RM, cc)))
    }
    fn ln(&self) -> Self {
        with_consts(|cc| BigFloat(self.0.ln(PRECISION_BITS, RM, cc)))
    }
    fn sin(&self) -> Self {
        with_consts(|cc| BigFloat(self.0.sin(PRECISION_BITS, RM, cc)))
    }
    fn cos(&self) -> Self {
        with_consts(|cc| BigFloat(self.0.cos(PRECISION_BITS, RM, cc)))
    }
    fn sqrt(&self) -> Self {
        BigFloat(self.0.sqrt(PRECISION_BITS, RM))
    }
    // astro-float's correctly rounded `pow` never terminates on exactly
    // representable results, so it is avoided entirely.
    fn powr(&self, e: &Self) -> Self {
        let n = e.to_f64();
        if n.fract() == 0.0 && n.abs() < 1e9 && *e == BigFloat::from_int(n as i64) {
            let p = self.powi_abs(n.abs() as u64);
            return if n < 0.0 { p.recip() } else { p };
        }
        (e.clone() * self.ln()).exp()
    }
    fn abs(&self) -> Self {
        BigFloat(self.0.abs())
    }
    fn is_finite(&self) -> bool {
        !(self.0.is_nan() || self.0.is_inf())
    }
    fn to_sci(&self, digits: usize) -> String {
        round_decimal(&self.to_decimal_string(), digits)
    }
}

/// Rounds a decimal string `[-]d.ddd...e[+-]N` to `digits` significant
/// digits with ties to even.
fn round_decimal(text: &str, digits: usize) -> String {
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (text, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let all: String = format!("{int_part}{frac_part}");
    if !all.chars().all(|c| c.is_ascii_digit()) {
        return text.to_string();
    }
    // Normalize so the first digit is nonzero.
    let lead_zeros = all.chars().take_while(|&c| c == '0').count();
    if lead_zeros == all.len() {
        return format!(
            "{}0.{}e0",
            if neg { "-" } else { "" },
            "0".repeat(digits.saturating_sub(1))
        );
    }
    let mut exp10 = exp + int_part.len() as i64 - 1 - lead_zeros as i64;
    let sig: Vec<u8> = all.bytes().skip(lead_zeros).map(|b| b - b'0').collect();
    let mut kept: Vec<u8> = sig.iter().copied().take(digits).collect();
    kept.resize(digits, 0);
    let rest = if sig.len() > digits { &sig[digits..] } else { &[][..] };
    let round_up = match rest.first() {
        None => false,
        Some(&d) if d > 5 => true,
        Some(&d) if d < 5 => false,
        Some(_) => {
            if rest[1..].iter().any(|&d| d != 0) {
                true
            } else {
                kept.last().is_some_and(|&d| d % 2 == 1)
            }
        }
    };
    if round_up {
        let mut i = kept.len();
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exp10 += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let body: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
    let (head, tail) = body.split_at(1);
    let sign = if neg { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{exp10}")
    } else {
        format!("{sign}{head}.{tail}e{exp10}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::q;

    #[test]
    fn rounding_half_even() {
        assert_eq!(round_decimal("1.25e0", 2), "1.2e0");
        assert_eq!(round_decimal("1.35e0", 2), "1.4e0");
        assert_eq!(round_decimal("1.2501e0", 2), "1.3e0");
        assert_eq!(round_decimal("9.99e-3", 2), "1.0e-2");
        assert_eq!(round_decimal("-0.00123e0", 2), "-1.2e-3");
        assert_eq!(round_decimal("123.0e0", 3), "1.23e2");
    }

    #[test]
    fn precision_exceeds_double() {
        let third = BigFloat::from_rational(&q(1, 3));
        let back = third.clone() * BigFloat::from_int(3);
        let err = (back - BigFloat::one()).abs();
        assert!(err < BigFloat::from_f64(1e-55));
        assert_eq!(third.to_sci(30), "3.33333333333333333333333333333e-1");
    }

    #[test]
    fn transcendental_identities() {
        let x = BigFloat::from_rational(&q(7, 10));
        let s = x.sin();
        let c = x.cos();
        let one = s.clone() * s + c.clone() * c;
        assert!((one - BigFloat::one()).abs() < BigFloat::from_f64(1e-55));
        let back = x.exp().ln();
        assert!((back - x.clone()).abs() < BigFloat::from_f64(1e-55));
        let p = x.powr(&BigFloat::from_rational(&q(5, 2)));
        let direct = x.clone() * x.clone() * x.sqrt();
        assert!((p - direct).abs() < BigFloat::from_f64(1e-55));
        assert_eq!(BigFloat::pi().to_sci(12), "3.14159265359e0");
    }
}
