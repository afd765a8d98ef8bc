//! Scalar regimes for the whole library.
//!
//! Every algorithm is generic over [`Scalar`] and is instantiated in exactly
//! two ways:
//!
//! * **exact** — Gaussian integers ([`ExactScalar`]). Addition, subtraction,
//!   multiplication and conjugation stay inside the integers, so identity
//!   residuals are exact and the only acceptable residual is literal zero.
//! * **float** — complex doubles ([`FloatScalar`]). Residuals are judged
//!   against an explicit tolerance in the max norm.
//!
//! Nothing in the library ever divides, so closure over the integers is a
//! theorem, not a hope.

use num_complex::Complex;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Complex scalars with integer components; equality is exact.
pub type ExactScalar = Complex<i64>;

/// Complex scalars with double components; equality is up to tolerance.
pub type FloatScalar = Complex<f64>;

/// Default residual tolerance for the float regime. Inputs are unit-scale
/// and the verified expressions are short polynomials, so anything beyond
/// accumulated rounding shows up orders of magnitude above this.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

/// The ring operations every cubic-matrix algorithm needs, plus the two
/// hooks that make residual reporting and complex conjugation uniform
/// across the exact and float regimes.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Complex conjugate.
    fn conj(&self) -> Self;

    /// Max norm of the scalar: `max(|re|, |im|)`, widened to `f64` for
    /// residual reporting. Exact scalars report an integer-valued double.
    fn abs_max(&self) -> f64;

    /// Embed a pair of integers as `re + im*i`. Used by generators and by
    /// structure-constant builders whose values are small integers.
    fn from_i64_pair(re: i64, im: i64) -> Self;

    /// Real and imaginary parts as doubles (lossless at the magnitudes this
    /// library works at; used only for display and serialization).
    fn parts(&self) -> (f64, f64);
}

impl Scalar for ExactScalar {
    fn conj(&self) -> Self {
        Complex::new(self.re, -self.im)
    }

    fn abs_max(&self) -> f64 {
        (self.re.unsigned_abs().max(self.im.unsigned_abs())) as f64
    }

    fn from_i64_pair(re: i64, im: i64) -> Self {
        Complex::new(re, im)
    }

    fn parts(&self) -> (f64, f64) {
        (self.re as f64, self.im as f64)
    }
}

impl Scalar for FloatScalar {
    fn conj(&self) -> Self {
        Complex::new(self.re, -self.im)
    }

    fn abs_max(&self) -> f64 {
        self.re.abs().max(self.im.abs())
    }

    fn from_i64_pair(re: i64, im: i64) -> Self {
        Complex::new(re as f64, im as f64)
    }

    fn parts(&self) -> (f64, f64) {
        (self.re, self.im)
    }
}

/// Render a scalar the way a person would write it: `0`, `3`, `-2i`, `1+4i`.
pub fn display_scalar<S: Scalar>(s: &S) -> String {
    let (re, im) = s.parts();
    let fmt_part = |v: f64| -> String {
        if v == v.trunc() && v.abs() < 1e15 {
            format!("{}", v as i64)
        } else {
            format!("{v}")
        }
    };
    if im == 0.0 {
        fmt_part(re)
    } else if re == 0.0 {
        format!("{}i", fmt_part(im))
    } else if im < 0.0 {
        format!("{}-{}i", fmt_part(re), fmt_part(-im))
    } else {
        format!("{}+{}i", fmt_part(re), fmt_part(im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_conjugation_and_norm() {
        let z = ExactScalar::new(3, -4);
        assert_eq!(Scalar::conj(&z), ExactScalar::new(3, 4));
        assert_eq!(z.abs_max(), 4.0);
        assert_eq!(ExactScalar::from_i64_pair(-2, 7), ExactScalar::new(-2, 7));
    }

    #[test]
    fn float_norm_takes_the_larger_component() {
        let z = FloatScalar::new(0.25, -0.5);
        assert_eq!(z.abs_max(), 0.5);
    }

    #[test]
    fn display_covers_the_sign_cases() {
        assert_eq!(display_scalar(&ExactScalar::new(0, 0)), "0");
        assert_eq!(display_scalar(&ExactScalar::new(5, 0)), "5");
        assert_eq!(display_scalar(&ExactScalar::new(0, -2)), "-2i");
        assert_eq!(display_scalar(&ExactScalar::new(1, 4)), "1+4i");
        assert_eq!(display_scalar(&ExactScalar::new(1, -4)), "1-4i");
        assert_eq!(display_scalar(&FloatScalar::new(0.5, 0.0)), "0.5");
    }
}
