use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{DetRing, DetStrategy, Field, Scalar};
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector with trailing zeros removed.
///
/// Trimming makes the derived lexicographic `Ord` on `Vec<u32>` coincide with
/// the lex monomial order `z_1 > z_2 > ... > z_m`.
pub type Exponents = Vec<u32>;

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exponents(a: &[u32], b: &[u32]) -> Exponents {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

/// `a / b` as exponents, or `None` when `b` does not divide `a`.
fn sub_exponents(a: &[u32], b: &[u32]) -> Option<Exponents> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.to_vec();
    for (o, s) in out.iter_mut().zip(b) {
        *o = o.checked_sub(*s)?;
    }
    Some(trim(out))
}

/// Sparse multivariate polynomial in `z_1, ..., z_m`.
///
/// Equality compares terms only, so a zero built by `Zero::zero()` equals a
/// zero built in any number of variables.
#[derive(Clone, Debug)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Exponents, T>,
}

impl<T: PartialEq> PartialEq for MultiPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<T: Eq> Eq for MultiPoly<T> {}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero_in(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero_in(nvars);
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable `z_{index+1}` (zero-based index).
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut e = vec![0; index + 1];
        e[index] = 1;
        let mut p = Self::zero_in(nvars);
        p.add_term(e, T::one());
        p
    }

    /// Embeds `p(z_{var+1})`.
    pub fn from_univariate(nvars: usize, var: usize, p: &UniPoly<T>) -> Self {
        assert!(var < nvars, "variable index {var} out of range for {nvars} variables");
        let mut out = Self::zero_in(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; var + 1];
            e[var] = k as u32;
            out.add_term(trim(e), c.clone());
        }
        out
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, T)>) -> Self {
        let mut out = Self::zero_in(nvars);
        for (e, c) in terms {
            assert!(e.len() <= nvars, "exponent vector longer than variable count");
            out.add_term(trim(e), c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &T)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exponents: &[u32]) -> T {
        self.terms
            .get(&trim(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Leading term in lex order with `z_1 > z_2 > ...`.
    pub fn leading_term(&self) -> Option<(&Exponents, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Exponents, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, e: Exponents, c: &T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(-c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() -= c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| {
                    let mut a = a.clone();
                    a *= c;
                    (e.clone(), a)
                })
                .collect(),
        }
    }

    /// Renames `z_{k+1}` to `z_{perm[k]+1}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars, "permutation size must match variable count");
        let mut out = Self::zero_in(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (k, &x) in e.iter().enumerate() {
                ne[perm[k]] = x;
            }
            out.add_term(trim(ne), c.clone());
        }
        out
    }

    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    /// Renames `z_k` to `z_{k+offset}` inside `nvars` variables.
    pub fn shift_variables(&self, offset: usize, nvars: usize) -> Self {
        assert!(self.nvars + offset <= nvars, "shifted variables exceed target count");
        let mut out = Self::zero_in(nvars);
        for (e, c) in &self.terms {
            if e.is_empty() {
                out.add_term(Vec::new(), c.clone());
                continue;
            }
            let mut ne = vec![0; offset];
            ne.extend_from_slice(e);
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert!(point.len() >= self.nvars, "evaluation point too short");
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Sets every variable equal to a single `z`.
    pub fn substitute_diagonal(&self) -> UniPoly<T> {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![T::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k: u32 = e.iter().sum();
            coeffs[k as usize] += c;
        }
        UniPoly::new(coeffs)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|j| self.swap_variables(0, j) == *self)
    }
}

impl<T: Field> MultiPoly<T> {
    /// Exact quotient `self / den`.
    ///
    /// Reduction runs in lex order; if the leading monomial of the remainder
    /// is not divisible by that of `den`, `den` cannot divide `self`.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        let (lead_e, lead_c) = den
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or_else(|| Error::Divisibility("division by the zero polynomial".into()))?;
        let nvars = self.nvars.max(den.nvars);
        let mut rem = self.clone();
        rem.nvars = nvars;
        let mut quot = Self::zero_in(nvars);
        while let Some((e, c)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let qe = sub_exponents(&e, &lead_e)
                .ok_or_else(|| Error::Divisibility(format!("leading monomial {e:?} is not divisible by {lead_e:?}")))?;
            let qc = c / lead_c.clone();
            for (de, dc) in &den.terms {
                let mut t = qc.clone();
                t *= dc;
                rem.sub_term(add_exponents(&qe, de), &t);
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }
}

impl<T: Scalar> Zero for MultiPoly<T> {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for MultiPoly<T> {
    fn one() -> Self {
        Self::constant(0, T::one())
    }
}

impl<T: Scalar> std::ops::AddAssign<&MultiPoly<T>> for MultiPoly<T> {
    fn add_assign(&mut self, rhs: &MultiPoly<T>) {
        self.nvars = self.nvars.max(rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<T: Scalar> std::ops::SubAssign<&MultiPoly<T>> for MultiPoly<T> {
    fn sub_assign(&mut self, rhs: &MultiPoly<T>) {
        self.nvars = self.nvars.max(rhs.nvars);
        for (e, c) in &rhs.terms {
            self.sub_term(e.clone(), c);
        }
    }
}

impl<T: Scalar> std::ops::MulAssign<&MultiPoly<T>> for MultiPoly<T> {
    fn mul_assign(&mut self, rhs: &MultiPoly<T>) {
        *self = &*self * rhs;
    }
}

impl<T: Scalar> Mul<&MultiPoly<T>> for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn mul(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = MultiPoly::zero_in(self.nvars.max(rhs.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut c = ca.clone();
                c *= cb;
                out.add_term(add_exponents(ea, eb), c);
            }
        }
        out
    }
}

impl<T: Scalar> Mul for MultiPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Add for MultiPoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Scalar> Sub for MultiPoly<T> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Add<&MultiPoly<T>> for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn add(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Sub<&MultiPoly<T>> for &MultiPoly<T> {
    type Output = MultiPoly<T>;
    fn sub(self, rhs: &MultiPoly<T>) -> MultiPoly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Neg for MultiPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<T: Scalar> Scalar for MultiPoly<T> {
    fn from_int(n: i64) -> Self {
        Self::constant(0, T::from_int(n))
    }
}

impl<T: Field> DetRing for MultiPoly<T> {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.exact_divide(divisor)
    }

    fn det_strategy(n: usize) -> DetStrategy {
        if n <= 6 {
            DetStrategy::Cofactor
        } else {
            DetStrategy::Bareiss
        }
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (k, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*z{}", k + 1)?,
                    _ => write!(f, "*z{}^{x}", k + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, q};
    use crate::{QMultiPoly, QPoly};

    fn z(m: usize, i: usize) -> QMultiPoly {
        QMultiPoly::variable(m, i)
    }

    #[test]
    fn difference_of_squares() {
        let num = &(&z(2, 1) * &z(2, 1)) - &(&z(2, 0) * &z(2, 0));
        let den = &z(2, 1) - &z(2, 0);
        assert_eq!(num.exact_divide(&den).unwrap(), &z(2, 0) + &z(2, 1));
    }

    #[test]
    fn inexact_division_is_reported() {
        let num = &(&z(2, 0) * &z(2, 0)) + &z(2, 1);
        let den = &z(2, 1) - &z(2, 0);
        assert!(matches!(num.exact_divide(&den), Err(Error::Divisibility(_))));
        assert!(num.exact_divide(&QMultiPoly::zero_in(2)).is_err());
    }

    #[test]
    fn lex_leading_term() {
        // z1 z2^3 + z1^2 : lex leader is z1^2
        let p = &(&z(2, 0) * &(&z(2, 1) * &(&z(2, 1) * &z(2, 1)))) + &(&z(2, 0) * &z(2, 0));
        assert_eq!(p.leading_term().unwrap().0, &vec![2]);
    }

    #[test]
    fn diagonal_substitution_and_eval() {
        let p = QPoly::new(vec![q(1, 2), int(0), int(1)]);
        let a = QMultiPoly::from_univariate(3, 2, &p);
        assert_eq!(a.substitute_diagonal(), p);
        assert_eq!(a.eval(&[int(5), int(7), int(2)]), q(9, 2));
    }

    #[test]
    fn permute_and_shift() {
        let p = &z(3, 0) * &(&z(3, 1) * &z(3, 1));
        assert_eq!(p.swap_variables(0, 2), &z(3, 2) * &(&z(3, 1) * &z(3, 1)));
        let s = z(2, 0).shift_variables(1, 3);
        assert_eq!(s, z(3, 1));
    }
}
