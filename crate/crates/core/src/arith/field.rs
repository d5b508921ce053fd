//! The scalar abstraction shared by exact and numeric code paths.
//!
//! Most geometric constructions (cubic substitution, chord-tangent
//! addition, 3x3 linear algebra) are written once over [`Field`] and run
//! either exactly over [`Rational`] or numerically over [`Complex`] at an
//! explicit working precision.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::{Complex, Float, Rational};

use super::numeric;

pub trait Field:
    Clone
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self {
        self.int_like(1)
    }
    fn int_like(&self, v: i64) -> Self;
    fn rational_like(&self, r: &Rational) -> Self;

    /// Exact zero test for rationals; for complex values, modulus below the
    /// working threshold `2^(-prec/2)` (absolute, callers rescale first).
    fn is_negligible(&self) -> bool;

    /// Pivot preference: larger is better, zero means unusable.
    fn pivot_weight(&self) -> f64;

    /// Compares two values up to the working threshold, relative to their size.
    fn near(&self, other: &Self) -> bool;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::new()
    }
    fn int_like(&self, v: i64) -> Self {
        Rational::from(v)
    }
    fn rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn is_negligible(&self) -> bool {
        self.cmp0().is_eq()
    }
    fn pivot_weight(&self) -> f64 {
        if self.cmp0().is_eq() {
            0.0
        } else {
            1.0
        }
    }
    fn near(&self, other: &Self) -> bool {
        self == other
    }
}

impl Field for Complex {
    fn zero_like(&self) -> Self {
        Complex::new(self.prec().0)
    }
    fn int_like(&self, v: i64) -> Self {
        Complex::with_val(self.prec().0, v)
    }
    fn rational_like(&self, r: &Rational) -> Self {
        Complex::with_val(self.prec().0, r)
    }
    fn is_negligible(&self) -> bool {
        let prec = self.prec().0;
        let m = Float::with_val(prec, self.abs_ref());
        m < numeric::threshold(prec)
    }
    fn pivot_weight(&self) -> f64 {
        Float::with_val(53, self.abs_ref()).to_f64()
    }
    fn near(&self, other: &Self) -> bool {
        let prec = self.prec().0;
        let d = Float::with_val(prec, (self.clone() - other).abs_ref());
        let a = Float::with_val(prec, self.abs_ref());
        let b = Float::with_val(prec, other.abs_ref());
        let scale = a.max(&b).max(&Float::with_val(prec, 1));
        d < numeric::threshold(prec) * scale
    }
}
