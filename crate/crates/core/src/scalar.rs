//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, Num};

/// Builds the integer `n` in any numeric ring by repeated addition of one.
///
/// Used for the binomial weights and derivative factors so that the exact
/// routines (evaluation, derivative, the quintic coefficients) stay available
/// for rational scalars.
pub fn small<T: Num + Copy>(n: u32) -> T {
    let mut acc = T::zero();
    for _ in 0..n {
        acc = acc + T::one();
    }
    acc
}

/// Floating point scalar used by the closed-form and root-isolation code.
///
/// Tolerances throughout the crate are written as `f64` literals and pulled
/// through [`Real::tol`], which floors them at a small multiple of the type's
/// machine epsilon so that the same code is meaningful for `f32`.
pub trait Real: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    fn lit(v: f64) -> Self;

    fn tol(v: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(16.0);
        Self::lit(v).max(floor)
    }

    fn to_f64_lossy(self) -> f64;
}

impl Real for f64 {
    #[inline]
    fn lit(v: f64) -> Self {
        v
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self
    }
}

impl Real for f32 {
    #[inline]
    fn lit(v: f64) -> Self {
        v as f32
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_integers() {
        assert_eq!(small::<i64>(6), 6);
        assert_eq!(small::<f64>(0), 0.0);
    }

    #[test]
    fn tolerance_floor_only_bites_for_f32() {
        assert_eq!(<f64 as Real>::tol(1e-12), 1e-12);
        assert!(<f32 as Real>::tol(1e-12) > 1e-7);
    }
}
