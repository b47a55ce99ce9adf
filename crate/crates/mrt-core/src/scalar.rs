//! Scalar abstraction shared by the exact and floating-point layers.

use core::fmt::Debug;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar. The default choice for exact work.
pub type Rational = num_rational::BigRational;

/// Fixed-width rational scalar backed by `i128`.
///
/// Roughly an order of magnitude faster than [`Rational`] on the identity
/// sweeps. The workspace compiles with `overflow-checks = true` in every
/// profile, so an overflow aborts the computation instead of corrupting it.
pub type Rational128 = Ratio<i128>;

/// Field operations needed by the tensor algebra.
///
/// Implemented for `f64` and for exact rationals. Division is only ever used
/// with nonzero divisors (combinatorial normalization factors).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn from_int(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Reference-friendly multiply-accumulate: `self += a * b`.
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        *self += a.clone() * b.clone();
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Scalar for Rational {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += a * b;
        }
    }
}

impl Scalar for Rational128 {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num as i128, den as i128)
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += a * b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_construction() {
        assert_eq!(Rational::from_ratio(2, 4), Rational::from_ratio(1, 2));
        assert_eq!(Rational128::from_ratio(-3, 6), Rational128::from_ratio(-1, 2));
        assert_eq!(f64::from_ratio(1, 4), 0.25);
    }

    #[test]
    fn mul_add() {
        let mut acc = Rational::from_int(1);
        acc.mul_add_assign(&Rational::from_ratio(1, 3), &Rational::from_int(6));
        assert_eq!(acc, Rational::from_int(3));
    }
}
