//! Truncated Taylor arithmetic for derivatives of transcendental expressions.
//!
//! [`Jet2`] carries `(f, f', f'')` and is what the potential and residual
//! code uses. [`TaylorJet`] carries an arbitrary number of normalized Taylor
//! coefficients and backs the higher-order Wronskians and chain iteration.

use std::ops::{Add, Div, Mul, Neg, Sub};

use super::real::Real;
use crate::{QPoly, Rational};

/// Operations shared by the jet types; lets the gauge formulas be written once.
pub trait JetOps<R: Real>:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn value(&self) -> &R;
    /// A constant jet of the same order.
    fn constant_like(&self, c: R) -> Self;
    fn scale(&self, c: &R) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    /// `self^e`; requires a positive value.
    fn powr(&self, e: &R) -> Self;

    fn powi(&self, n: u32) -> Self {
        let mut acc = self.constant_like(R::one());
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    fn add_const(&self, c: &R) -> Self {
        self.clone() + self.constant_like(c.clone())
    }

    /// Horner evaluation of a rational polynomial at this jet.
    fn eval_poly(&self, p: &QPoly) -> Self {
        let coeffs: Vec<R> = p.coeffs().iter().map(R::from_rational).collect();
        self.eval_real_poly(&coeffs)
    }

    /// Horner evaluation with pre-converted ascending coefficients.
    fn eval_real_poly(&self, coeffs: &[R]) -> Self {
        let mut iter = coeffs.iter().rev();
        let Some(first) = iter.next() else {
            return self.constant_like(R::zero());
        };
        let mut acc = self.constant_like(first.clone());
        for c in iter {
            acc = (acc * self.clone()).add_const(c);
        }
        acc
    }
}

/// Second-order jet `(f, f', f'')`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2<R> {
    pub value: R,
    pub first_derivative: R,
    pub second_derivative: R,
}

impl<R: Real> Jet2<R> {
    pub fn new(value: R, first_derivative: R, second_derivative: R) -> Self {
        Self {
            value,
            first_derivative,
            second_derivative,
        }
    }

    /// The independent variable at `x`.
    pub fn variable(x: R) -> Self {
        Self::new(x, R::one(), R::zero())
    }

    pub fn constant(c: R) -> Self {
        Self::new(c, R::zero(), R::zero())
    }

    pub fn from_rational(x: &Rational) -> Self {
        Self::variable(R::from_rational(x))
    }

    /// `f(g)` given `f(g0), f'(g0), f''(g0)`.
    fn chain(&self, f0: R, f1: R, f2: R) -> Self {
        let d1 = f1.clone() * self.first_derivative.clone();
        let d2 =
            f2 * self.first_derivative.clone() * self.first_derivative.clone() + f1 * self.second_derivative.clone();
        Self::new(f0, d1, d2)
    }

    /// Second derivative of `ln |f|`.
    pub fn log_second_derivative(&self) -> R {
        let f = self.value.clone();
        (self.second_derivative.clone() * f.clone() - self.first_derivative.clone() * self.first_derivative.clone())
            / (f.clone() * f)
    }
}

impl<R: Real> Add for Jet2<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.value + o.value,
            self.first_derivative + o.first_derivative,
            self.second_derivative + o.second_derivative,
        )
    }
}

impl<R: Real> Sub for Jet2<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.value - o.value,
            self.first_derivative - o.first_derivative,
            self.second_derivative - o.second_derivative,
        )
    }
}

impl<R: Real> Mul for Jet2<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two = R::from_int(2);
        let d2 = self.second_derivative.clone() * o.value.clone()
            + two * self.first_derivative.clone() * o.first_derivative.clone()
            + self.value.clone() * o.second_derivative.clone();
        let d1 = self.first_derivative.clone() * o.value.clone() + self.value.clone() * o.first_derivative.clone();
        Self::new(self.value * o.value, d1, d2)
    }
}

impl<R: Real> Div for Jet2<R> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let v = o.value.clone();
        let inv = v.recip();
        // 1/g: (1/g, -g'/g^2, 2g'^2/g^3 - g''/g^2)
        let recip = o.chain(
            inv.clone(),
            -(inv.clone() * inv.clone()),
            R::from_int(2) * inv.clone() * inv.clone() * inv,
        );
        self * recip
    }
}

impl<R: Real> Neg for Jet2<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, -self.first_derivative, -self.second_derivative)
    }
}

impl<R: Real> JetOps<R> for Jet2<R> {
    fn value(&self) -> &R {
        &self.value
    }
    fn constant_like(&self, c: R) -> Self {
        Self::constant(c)
    }
    fn scale(&self, c: &R) -> Self {
        Self::new(
            self.value.clone() * c.clone(),
            self.first_derivative.clone() * c.clone(),
            self.second_derivative.clone() * c.clone(),
        )
    }
    fn exp(&self) -> Self {
        let e = self.value.exp();
        self.chain(e.clone(), e.clone(), e)
    }
    fn ln(&self) -> Self {
        let inv = self.value.recip();
        self.chain(self.value.ln(), inv.clone(), -(inv.clone() * inv))
    }
    fn sin(&self) -> Self {
        let s = self.value.sin();
        let c = self.value.cos();
        self.chain(s.clone(), c, -s)
    }
    fn cos(&self) -> Self {
        let s = self.value.sin();
        let c = self.value.cos();
        self.chain(c.clone(), -s, -c)
    }
    fn powr(&self, e: &R) -> Self {
        let one = R::one();
        let v = self.value.clone();
        let p0 = v.powr(e);
        let p1 = e.clone() * p0.clone() / v.clone();
        let p2 = e.clone() * (e.clone() - one) * p0.clone() / (v.clone() * v);
        self.chain(p0, p1, p2)
    }
}

/// Truncated Taylor series `sum_k c_k h^k`, `c_k = f^{(k)}(x)/k!`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorJet<R> {
    coeffs: Vec<R>,
}

impl<R: Real> TaylorJet<R> {
    /// The independent variable at `x`, carrying derivatives up to `order`.
    pub fn variable(x: R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[0] = x;
        if order >= 1 {
            coeffs[1] = R::one();
        }
        Self { coeffs }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn taylor_coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `f^{(k)}(x)`.
    pub fn derivative_value(&self, k: usize) -> R {
        let mut fact = R::one();
        for i in 2..=k {
            fact = fact * R::from_int(i as i64);
        }
        self.coeffs[k].clone() * fact
    }

    /// The jet of `f'`, one order lower.
    pub fn differentiate(&self) -> Self {
        let n = self.order();
        assert!(n >= 1, "cannot differentiate an order-0 jet");
        let coeffs = (0..n)
            .map(|k| self.coeffs[k + 1].clone() * R::from_int(k as i64 + 1))
            .collect();
        Self { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn to_jet2(&self) -> Jet2<R> {
        let get = |k: usize| {
            if k <= self.order() {
                self.derivative_value(k)
            } else {
                R::zero()
            }
        };
        Jet2::new(get(0), get(1), get(2))
    }

    fn same_order(&self, o: &Self) -> usize {
        self.order().min(o.order())
    }
}

impl<R: Real> Add for TaylorJet<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.same_order(&o);
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k].clone() + o.coeffs[k].clone()).collect(),
        }
    }
}

impl<R: Real> Sub for TaylorJet<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.same_order(&o);
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k].clone() - o.coeffs[k].clone()).collect(),
        }
    }
}

impl<R: Real> Mul for TaylorJet<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let n = self.same_order(&o);
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(R::zero(), |acc, j| {
                    acc + self.coeffs[j].clone() * o.coeffs[k - j].clone()
                })
            })
            .collect();
        Self { coeffs }
    }
}

impl<R: Real> Div for TaylorJet<R> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = self.same_order(&o);
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc - o.coeffs[j].clone() * b[k - j].clone();
            }
            b.push(acc / o.coeffs[0].clone());
        }
        Self { coeffs: b }
    }
}

impl<R: Real> Neg for TaylorJet<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Real> JetOps<R> for TaylorJet<R> {
    fn value(&self) -> &R {
        &self.coeffs[0]
    }
    fn constant_like(&self, c: R) -> Self {
        Self::constant(c, self.order())
    }
    fn scale(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }
    fn exp(&self) -> Self {
        // k b_k = sum_{j=1..k} j a_j b_{k-j}
        let n = self.order();
        let a = &self.coeffs;
        let mut b = vec![a[0].exp()];
        for k in 1..=n {
            let s = (1..=k).fold(R::zero(), |acc, j| {
                acc + R::from_int(j as i64) * a[j].clone() * b[k - j].clone()
            });
            b.push(s / R::from_int(k as i64));
        }
        Self { coeffs: b }
    }
    fn ln(&self) -> Self {
        // a_0 k b_k = k a_k - sum_{j=1..k-1} j b_j a_{k-j}
        let n = self.order();
        let a = &self.coeffs;
        let mut b = vec![a[0].ln()];
        for k in 1..=n {
            let mut s = R::from_int(k as i64) * a[k].clone();
            for j in 1..k {
                s = s - R::from_int(j as i64) * b[j].clone() * a[k - j].clone();
            }
            b.push(s / (R::from_int(k as i64) * a[0].clone()));
        }
        Self { coeffs: b }
    }
    fn sin(&self) -> Self {
        self.sin_cos().0
    }
    fn cos(&self) -> Self {
        self.sin_cos().1
    }
    fn powr(&self, e: &R) -> Self {
        // a_0 k b_k = sum_{j=1..k} (e j - (k - j)) a_j b_{k-j}
        let n = self.order();
        let a = &self.coeffs;
        let mut b = vec![a[0].powr(e)];
        for k in 1..=n {
            let s = (1..=k).fold(R::zero(), |acc, j| {
                let w = e.clone() * R::from_int(j as i64) - R::from_int((k - j) as i64);
                acc + w * a[j].clone() * b[k - j].clone()
            });
            b.push(s / (R::from_int(k as i64) * a[0].clone()));
        }
        Self { coeffs: b }
    }
}

impl<R: Real> TaylorJet<R> {
    fn sin_cos(&self) -> (Self, Self) {
        let n = self.order();
        let a = &self.coeffs;
        let mut s = vec![a[0].sin()];
        let mut c = vec![a[0].cos()];
        for k in 1..=n {
            let mut ds = R::zero();
            let mut dc = R::zero();
            for j in 1..=k {
                let w = R::from_int(j as i64) * a[j].clone();
                ds = ds + w.clone() * c[k - j].clone();
                dc = dc - w * s[k - j].clone();
            }
            let kk = R::from_int(k as i64);
            s.push(ds / kk.clone());
            c.push(dc / kk);
        }
        (Self { coeffs: s }, Self { coeffs: c })
    }
}
