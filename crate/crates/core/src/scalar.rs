use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Scalar types the closed-form invariants can be evaluated in.
///
/// Implemented for `f32`, `f64` and [`BigRational`]. Only ring operations,
/// division and conversion from counts are needed.
pub trait Scalar: Num + Clone + PartialOrd + Debug + ToPrimitive + FromPrimitive {
    /// Converts a nonnegative count into the scalar type.
    fn from_count(count: u64) -> Self;

    /// Nearest `f64`, used for reporting.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_count(count: u64) -> Self {
        count as f64
    }
}

impl Scalar for f32 {
    fn from_count(count: u64) -> Self {
        count as f32
    }
}

impl Scalar for BigRational {
    fn from_count(count: u64) -> Self {
        BigRational::from_integer(BigInt::from(count))
    }

    fn to_f64_lossy(&self) -> f64 {
        // Large numerators and denominators overflow `f64` individually even
        // when the quotient is tiny; scale them down together first.
        if let Some(v) = self.to_f64() {
            if v.is_finite() {
                return v;
            }
        }
        let numer = self.numer();
        let denom = self.denom();
        let shift = numer.bits().max(denom.bits()).saturating_sub(1000);
        let n = (numer >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (denom >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    }
}

/// Formats an exact rational as `"p/q"`, always including the denominator.
pub fn rational_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}
