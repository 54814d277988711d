//! Complex scalars of the two-particle inner product.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// The value `re + im*(I sigma3^1)` returned by the quantum inner product.
///
/// Right multiplication by `I sigma3^1` plays the part of the unit
/// imaginary on correlated states, so these behave as ordinary complex
/// numbers; the printer labels the imaginary unit `j`.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub const ZERO: ComplexScalar = ComplexScalar { re: 0.0, im: 0.0 };
    pub const ONE: ComplexScalar = ComplexScalar { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        ComplexScalar { re, im }
    }

    pub fn conj(self) -> Self {
        ComplexScalar::new(self.re, -self.im)
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn inverse(self) -> Result<Self, Error> {
        let norm = self.re * self.re + self.im * self.im;
        if norm == 0.0 {
            return Err(Error::ZeroModulus);
        }
        Ok(ComplexScalar::new(self.re / norm, -self.im / norm))
    }

    /// Largest componentwise deviation from `other`.
    pub fn max_abs_diff(self, other: ComplexScalar) -> f64 {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }
}

impl Add for ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: Self) -> Self {
        ComplexScalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: Self) -> Self {
        ComplexScalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: Self) -> Self {
        ComplexScalar::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: f64) -> Self {
        ComplexScalar::new(self.re * rhs, self.im * rhs)
    }
}

impl Neg for ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> Self {
        ComplexScalar::new(-self.re, -self.im)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{} - {}j", self.re, -self.im)
        } else {
            write!(f, "{} + {}j", self.re, self.im)
        }
    }
}
