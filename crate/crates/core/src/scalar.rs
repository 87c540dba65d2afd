//! Coefficient fields.
//!
//! Every algorithm in this crate is written against [`Scalar`], a thin
//! bundle of `num-traits` bounds describing an exact field of
//! characteristic zero. The crate root fixes the production choice
//! ([`crate::Rational`], arbitrary precision); fixed-width rationals are
//! available for cheap cross-checks in tests.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, NumAssignRef, NumRef, Signed};

/// An exact field of characteristic zero.
///
/// Floating point types are deliberately not implementors: Gröbner
/// reduction and rank computations are only meaningful with exact
/// zero tests.
pub trait Scalar:
    Num
    + NumRef
    + NumAssignRef
    + Neg<Output = Self>
    + Signed
    + FromPrimitive
    + Clone
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }

    /// Embeds a ratio of machine integers. Panics on a zero denominator.
    fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }

    /// Exact conversion to an arbitrary precision rational.
    fn to_big_rational(&self) -> BigRational;
}

impl Scalar for BigRational {
    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }
}

macro_rules! fixed_width_scalar {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            fn to_big_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    )*};
}

fixed_width_scalar!(i64, i128);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_stay_in_lowest_terms() {
        let x = BigRational::frac(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn fixed_width_embeds_exactly() {
        let x = Ratio::<i128>::frac(10, 4);
        assert_eq!(x.to_big_rational(), BigRational::frac(5, 2));
    }
}
