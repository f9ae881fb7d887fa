use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{DetRing, DetStrategy, Field, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree() == len - 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn variable() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * z^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Horner evaluation in another ring, given a coefficient embedding.
    pub fn eval_with<R, F>(&self, x: &R, embed: F) -> R
    where
        R: Clone + Add<Output = R> + Mul<Output = R>,
        F: Fn(&T) -> R,
    {
        let mut iter = self.coeffs.iter().rev();
        let Some(first) = iter.next() else {
            return embed(&T::zero());
        };
        let mut acc = embed(first);
        for c in iter {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                let mut c = c.clone();
                c *= &T::from_int(k as i64);
                c
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let mut a = a.clone();
                    a *= c;
                    a
                })
                .collect(),
        )
    }

    /// `p(c z)`.
    pub fn scale_variable(&self, c: &T) -> Self {
        let mut power = T::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let mut a = a.clone();
            a *= &power;
            coeffs.push(a);
            power *= c;
        }
        Self::new(coeffs)
    }

    /// `self * z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Field> UniPoly<T> {
    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Divisibility("division by the zero polynomial".into()))?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let mut t = c.clone();
                t *= d;
                rem[k + i] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Divisibility("univariate division leaves a remainder".into()))
        }
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }
}

impl<T: Scalar> Zero for UniPoly<T> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for UniPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Scalar> std::ops::AddAssign<&UniPoly<T>> for UniPoly<T> {
    fn add_assign(&mut self, rhs: &UniPoly<T>) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::new(trimmed);
    }
}

impl<T: Scalar> std::ops::SubAssign<&UniPoly<T>> for UniPoly<T> {
    fn sub_assign(&mut self, rhs: &UniPoly<T>) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::new(trimmed);
    }
}

impl<T: Scalar> std::ops::MulAssign<&UniPoly<T>> for UniPoly<T> {
    fn mul_assign(&mut self, rhs: &UniPoly<T>) {
        *self = &*self * rhs;
    }
}

impl<T: Scalar> Add for UniPoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Scalar> Add<&UniPoly<T>> for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Sub for UniPoly<T> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Sub<&UniPoly<T>> for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Mul<&UniPoly<T>> for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let mut t = a.clone();
                t *= b;
                coeffs[i + j] += &t;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl<T: Scalar> Mul for UniPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for UniPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Scalar> Scalar for UniPoly<T> {
    fn from_int(n: i64) -> Self {
        Self::constant(T::from_int(n))
    }
}

impl<T: Field> DetRing for UniPoly<T> {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        UniPoly::exact_div(self, divisor)
    }

    fn det_strategy(n: usize) -> DetStrategy {
        if n <= 6 {
            DetStrategy::Cofactor
        } else {
            DetStrategy::Bareiss
        }
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = body == "1";
            match k {
                0 => write!(f, "{body}")?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{body}*z")?,
                _ if unit => write!(f, "z^{k}")?,
                _ => write!(f, "{body}*z^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::q;
    use crate::QPoly;

    fn poly(cs: &[(i64, i64)]) -> QPoly {
        QPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(poly(&[(0, 1)]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn derivative_and_eval() {
        // z^3 - 2z + 1/2
        let p = poly(&[(1, 2), (-2, 1), (0, 1), (1, 1)]);
        assert_eq!(p.derivative(), poly(&[(-2, 1), (0, 1), (3, 1)]));
        assert_eq!(p.nth_derivative(3), poly(&[(6, 1)]));
        assert!(p.nth_derivative(4).is_zero());
        assert_eq!(p.eval(&q(2, 1)), q(9, 2));
    }

    #[test]
    fn division_is_exact_or_reports() {
        let a = poly(&[(-1, 1), (0, 1), (1, 1)]);
        let b = poly(&[(-1, 1), (1, 1)]);
        assert_eq!(a.exact_div(&b).unwrap(), poly(&[(1, 1), (1, 1)]));
        let c = poly(&[(1, 1), (0, 1), (1, 1)]);
        assert!(matches!(c.exact_div(&b), Err(Error::Divisibility(_))));
        assert!(a.div_rem(&QPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(1, 2), (0, 1), (1, 1)]).to_string(), "z^2 + 1/2");
        assert_eq!(poly(&[(-3, 2), (1, 1)]).to_string(), "z - 3/2");
        assert_eq!(poly(&[(0, 1), (-2, 1)]).to_string(), "-2*z");
    }
}
