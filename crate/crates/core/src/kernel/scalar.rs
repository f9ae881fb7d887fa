//! Coefficient traits shared by the polynomial and determinant code.

use std::fmt::Debug;
use std::ops::{AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Commutative ring element usable as a polynomial coefficient or matrix entry.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
    /// The integer `n` embedded in the ring.
    fn from_int(n: i64) -> Self;
}

/// Scalar with division; exact for rationals, rounded for floats.
pub trait Field: Scalar + Div<Output = Self> {}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}
impl Field for BigRational {}

macro_rules! primitive_field {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_int(n: i64) -> Self {
                n as $t
            }
        }
        impl Field for $t {}
        impl DetRing for $t {
            fn exact_div(&self, divisor: &Self) -> Result<Self> {
                Ok(self / divisor)
            }
        }
    };
}

primitive_field!(f32);
primitive_field!(f64);

/// How a determinant over a given ring should be evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetStrategy {
    /// Division-free Laplace expansion (memoized over column subsets).
    Cofactor,
    /// Fraction-free Bareiss elimination.
    Bareiss,
}

/// Ring elements that support the exact division Bareiss elimination needs.
pub trait DetRing: Scalar {
    /// `self / divisor`, which the caller guarantees is exact.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// Preferred strategy for an `n x n` determinant.
    fn det_strategy(_n: usize) -> DetStrategy {
        DetStrategy::Bareiss
    }
}

impl DetRing for BigRational {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Divisibility("division by zero".into()));
        }
        Ok(self / divisor)
    }
}
