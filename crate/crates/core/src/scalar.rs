//! Scalar traits for the matrix and polynomial code.
//!
//! Everything in [`crate::spectral`] is written against [`Scalar`], a commutative
//! ring with exact-when-divisible division. [`Field`] marks the types where
//! division is always exact, which is what polynomial gcd and root isolation
//! need.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// A ring element usable as a matrix entry or polynomial coefficient.
///
/// `Div` is only required to be correct when the quotient is exact. For
/// integers this is the case in the trace recurrence used by
/// [`crate::spectral::charpoly`].
pub trait Scalar:
    Num + Clone + Debug + PartialEq + Neg<Output = Self> + Signed + FromPrimitive + ToPrimitive
{
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("usize fits scalar")
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits scalar")
    }

    /// Whether `self / d` loses nothing. Always true for fields.
    fn divisible_by(&self, _d: &Self) -> bool {
        true
    }
}

macro_rules! integer_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn divisible_by(&self, d: &Self) -> bool {
                (self.clone() % d.clone()).is_zero()
            }
        }
    )*};
}

integer_scalar!(i64, i128, BigInt);

impl Scalar for f32 {}
impl Scalar for f64 {}
impl Scalar for BigRational {}

/// Scalars with exact division by any nonzero element.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for BigRational {}
