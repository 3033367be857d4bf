//! The scalar abstraction: any exact field implementing the num-traits arithmetic
//! bounds.  The crate ships a single concrete instantiation, arbitrary-precision
//! rationals ([`Rat`]); the genericity keeps the kernels independent of the
//! concrete representation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field scalar.  Implemented by blanket impl for every type with the
/// required arithmetic; the only instantiation used in this crate is [`Rat`].
///
/// Note there is deliberately no floating-point implementation: every checker in
/// this crate decides equalities of rational polynomials in table entries, and
/// rounding would turn exact zeroes into noise.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rat = BigRational;

/// Shorthand constructor for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer scalar.
pub fn int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(0, 5), int(0));
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }
}
