//! Probability scalar abstraction.
//!
//! The whole engine is written once, generic over [`Prob`], and instantiated
//! with `f64` for everyday use and with [`BigRational`] when a computation
//! must be exact (the rational mode is the reference the float mode is
//! checked against in tests).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Sub};

/// Scalar type probabilities are computed in.
pub trait Prob:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Send
    + Sync
{
    /// The fraction `num / den`. `den` must be nonzero.
    fn ratio(num: u32, den: u32) -> Self;

    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;

    /// Absolute slack allowed when checking identities that are exact in
    /// rational arithmetic but accumulate rounding in floats.
    fn identity_slack() -> Self;

    fn from_usize(n: usize) -> Self;

    /// `self^exp` by square-and-multiply, with `x^0 = 1` (also for `x = 0`).
    fn powu(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut exp = exp;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Prob for f64 {
    fn ratio(num: u32, den: u32) -> Self {
        debug_assert!(den != 0);
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn identity_slack() -> Self {
        1e-12
    }

    fn from_usize(n: usize) -> Self {
        n as f64
    }
}

impl Prob for BigRational {
    fn ratio(num: u32, den: u32) -> Self {
        assert!(den != 0);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational representable as f64")
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn identity_slack() -> Self {
        BigRational::zero()
    }

    fn from_usize(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}
