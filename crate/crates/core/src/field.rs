//! Coefficient fields.
//!
//! Everything in the engine is generic over an exact field `C`. The blanket
//! impl picks up `num_rational::BigRational` (the default) as well as
//! fixed-width rationals such as `Ratio<i64>`, which are handy in tests but
//! may overflow on large inputs.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

/// An exact field of coefficients.
///
/// Division must be exact and `is_zero` must be decidable, so floating point
/// types do not qualify.
pub trait Field:
    Num + Signed + FromPrimitive + FromStr + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every field contains the integers")
    }

    fn inverse(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for T where
    T: Num
        + Signed
        + FromPrimitive
        + FromStr
        + Clone
        + Eq
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
