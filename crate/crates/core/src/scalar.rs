// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Floating-point scalar abstraction shared by every numerical module.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar usable by the simulator: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Conversion from a count or index.
    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable")
    }

    /// Unitarity tolerance: `1e-12` for `f64`, scaled up to machine
    /// precision for narrower types.
    #[inline]
    fn unitarity_tol() -> Self {
        Self::lit(1e-12).max(Self::epsilon() * Self::lit(4096.0))
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

/// Complex amplitude over a [`Real`] scalar.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn c_re<T: Real>(re: T) -> C<T> {
    Complex::new(re, T::zero())
}

/// `e^{i phi}`.
#[inline]
pub(crate) fn cis<T: Real>(phi: T) -> C<T> {
    Complex::new(phi.cos(), phi.sin())
}

/// `i^n` for a (possibly negative) integer power, exact.
#[inline]
pub(crate) fn i_pow<T: Real>(n: i64) -> C<T> {
    match n.rem_euclid(4) {
        0 => c(T::one(), T::zero()),
        1 => c(T::zero(), T::one()),
        2 => c(-T::one(), T::zero()),
        _ => c(T::zero(), -T::one()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_i_cycle() {
        let i: C<f64> = c(0.0, 1.0);
        let mut acc = c(1.0, 0.0);
        for n in 0..9 {
            assert_eq!(i_pow::<f64>(n), acc);
            acc *= i;
        }
        assert_eq!(i_pow::<f64>(-1), c(0.0, -1.0));
    }

    #[test]
    fn tolerance_tracks_precision() {
        assert_eq!(f64::unitarity_tol(), 1e-12);
        assert!(f32::unitarity_tol() > 1e-4);
    }
}
