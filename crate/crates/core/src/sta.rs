//! Single-particle spacetime-algebra vocabulary, lifted into either
//! particle space: frame vectors, relative vectors, ideal projectors,
//! Pauli and Weyl spinors, and four-vector embeddings.

use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

use crate::blade::Blade;
use crate::multivector::Multivector;

/// One of the two anticommuting copies of the spacetime algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParticleSpace {
    One,
    Two,
}

impl ParticleSpace {
    pub(crate) fn shift(self) -> u8 {
        match self {
            ParticleSpace::One => 0,
            ParticleSpace::Two => 4,
        }
    }

    pub fn other(self) -> ParticleSpace {
        match self {
            ParticleSpace::One => ParticleSpace::Two,
            ParticleSpace::Two => ParticleSpace::One,
        }
    }
}

/// Right-ideal selector for the projectors (1 +/- sigma3)/2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ideal {
    Plus,
    Minus,
}

impl Ideal {
    fn sign(self) -> f64 {
        match self {
            Ideal::Plus => 1.0,
            Ideal::Minus => -1.0,
        }
    }
}

/// Frame vector `gamma_mu` of the requested particle space.
pub fn gamma(mu: u8, space: ParticleSpace) -> Multivector {
    assert!(mu < 4, "frame index {mu} out of range");
    Multivector::from(Blade::generator(mu + space.shift()))
}

/// Pseudoscalar `I = gamma0 gamma1 gamma2 gamma3` of one particle space.
pub fn pseudoscalar(space: ParticleSpace) -> Multivector {
    Multivector::term(Blade(0b1111 << space.shift()), 1.0)
}

/// Relative vector `sigma_k = gamma_k gamma_0`.
pub fn sigma(k: u8, space: ParticleSpace) -> Multivector {
    assert!((1..=3).contains(&k), "spatial index {k} out of range");
    gamma(k, space) * gamma(0, space)
}

/// Spatial bivector `I sigma_k`, the quaternion units of one space.
pub fn i_sigma(k: u8, space: ParticleSpace) -> Multivector {
    pseudoscalar(space) * sigma(k, space)
}

/// Idempotent `(1 +/- sigma3)/2`; the two projectors of a space sum to 1
/// and annihilate each other.
pub fn ideal_projector(ideal: Ideal, space: ParticleSpace) -> Multivector {
    (&Multivector::scalar(1.0) + &sigma(3, space).scaled(ideal.sign())).scaled(0.5)
}

/// A real four-vector in natural units.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector {
        t: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    pub fn components(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn from_components(c: [f64; 4]) -> Self {
        FourVector::new(c[0], c[1], c[2], c[3])
    }

    /// Euclidean norm of the components, used for thresholds.
    pub fn abs_norm(self) -> f64 {
        self.components().iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Minkowski inner product with signature (+,-,-,-).
pub fn minkowski_dot(q: FourVector, r: FourVector) -> f64 {
    q.t * r.t - q.x * r.x - q.y * r.y - q.z * r.z
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: Self) -> Self {
        FourVector::new(
            self.t + rhs.t,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: Self) -> Self {
        FourVector::new(
            self.t - rhs.t,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> Self {
        FourVector::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, rhs: f64) -> Self {
        FourVector::new(self.t * rhs, self.x * rhs, self.y * rhs, self.z * rhs)
    }
}

/// A complexified position `r + I s`, stored as two real four-vectors.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct ComplexFourVector {
    pub r: FourVector,
    pub s: FourVector,
}

impl ComplexFourVector {
    pub const ZERO: ComplexFourVector = ComplexFourVector {
        r: FourVector::ZERO,
        s: FourVector::ZERO,
    };

    pub fn new(r: FourVector, s: FourVector) -> Self {
        ComplexFourVector { r, s }
    }

    pub fn real(r: FourVector) -> Self {
        ComplexFourVector {
            r,
            s: FourVector::ZERO,
        }
    }
}

impl Neg for ComplexFourVector {
    type Output = ComplexFourVector;
    fn neg(self) -> Self {
        ComplexFourVector::new(-self.r, -self.s)
    }
}

impl Add for ComplexFourVector {
    type Output = ComplexFourVector;
    fn add(self, rhs: Self) -> Self {
        ComplexFourVector::new(self.r + rhs.r, self.s + rhs.s)
    }
}

/// A Pauli-even element `a0 + a1 I sigma1 + a2 I sigma2 + a3 I sigma3`,
/// kept as four reals and materialized into a particle space on demand.
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct PauliSpinor {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl PauliSpinor {
    pub const ZERO: PauliSpinor = PauliSpinor {
        a0: 0.0,
        a1: 0.0,
        a2: 0.0,
        a3: 0.0,
    };

    pub fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        PauliSpinor { a0, a1, a2, a3 }
    }

    pub fn scalar(a0: f64) -> Self {
        PauliSpinor::new(a0, 0.0, 0.0, 0.0)
    }

    pub fn components(self) -> [f64; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }

    pub fn materialize(self, space: ParticleSpace) -> Multivector {
        let mut out = Multivector::scalar(self.a0);
        for (k, coeff) in [(1u8, self.a1), (2, self.a2), (3, self.a3)] {
            if coeff != 0.0 {
                out = &out + &i_sigma(k, space).scaled(coeff);
            }
        }
        out
    }

    /// Right multiplication by `I sigma3`, the single-space unit imaginary.
    pub fn times_i(self) -> Self {
        PauliSpinor::new(-self.a3, -self.a2, self.a1, self.a0)
    }

    pub fn max_abs(self) -> f64 {
        self.components().iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

impl Neg for PauliSpinor {
    type Output = PauliSpinor;
    fn neg(self) -> Self {
        PauliSpinor::new(-self.a0, -self.a1, -self.a2, -self.a3)
    }
}

impl Mul<f64> for PauliSpinor {
    type Output = PauliSpinor;
    fn mul(self, rhs: f64) -> Self {
        PauliSpinor::new(self.a0 * rhs, self.a1 * rhs, self.a2 * rhs, self.a3 * rhs)
    }
}

/// Embed a four-vector as `t gamma0 + x gamma1 + y gamma2 + z gamma3`.
pub fn embed_vector(v: FourVector, space: ParticleSpace) -> Multivector {
    let mut out = Multivector::zero();
    for (mu, coeff) in v.components().into_iter().enumerate() {
        if coeff != 0.0 {
            out = &out + &gamma(mu as u8, space).scaled(coeff);
        }
    }
    out
}

/// Embed a complexified position as `r + I s` in the requested space.
pub fn embed_complex_vector(k: ComplexFourVector, space: ParticleSpace) -> Multivector {
    &embed_vector(k.r, space) + &(pseudoscalar(space) * embed_vector(k.s, space))
}

/// Weyl-representation spinor `omega (1+sigma3)/2 + pi I sigma2 (1-sigma3)/2`.
pub fn weyl_spinor(omega: PauliSpinor, pi: PauliSpinor, space: ParticleSpace) -> Multivector {
    let primary = omega.materialize(space) * ideal_projector(Ideal::Plus, space);
    let projection =
        pi.materialize(space) * i_sigma(2, space) * ideal_projector(Ideal::Minus, space);
    &primary + &projection
}

/// Errors from the comma-separated vector syntax.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VectorParseError {
    #[error("expected 4 comma-separated components, found {0}")]
    WrongArity(usize),
    #[error("invalid component `{0}`")]
    InvalidComponent(String),
    #[error("expected at most one `;` between real and pseudoscalar parts")]
    TooManyParts,
}

impl FromStr for FourVector {
    type Err = VectorParseError;

    /// Parses `t,x,y,z`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(VectorParseError::WrongArity(parts.len()));
        }
        let mut c = [0.0; 4];
        for (slot, text) in c.iter_mut().zip(&parts) {
            *slot = text
                .trim()
                .parse()
                .map_err(|_| VectorParseError::InvalidComponent(text.to_string()))?;
        }
        Ok(FourVector::from_components(c))
    }
}

impl FromStr for ComplexFourVector {
    type Err = VectorParseError;

    /// Parses `t,x,y,z` or `t,x,y,z;ts,xs,ys,zs`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(';');
        let r: FourVector = parts.next().unwrap_or("").parse()?;
        let s_part = match parts.next() {
            Some(text) => text.parse()?,
            None => FourVector::ZERO,
        };
        if parts.next().is_some() {
            return Err(VectorParseError::TooManyParts);
        }
        Ok(ComplexFourVector::new(r, s_part))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_examples() {
        assert_eq!(
            embed_vector(FourVector::new(1.0, 0.0, 0.0, 0.0), ParticleSpace::One),
            gamma(0, ParticleSpace::One)
        );
        assert_eq!(
            embed_vector(FourVector::new(0.0, 1.0, 0.0, 0.0), ParticleSpace::Two),
            gamma(1, ParticleSpace::Two)
        );
        let v = embed_vector(FourVector::new(1.0, 2.0, 0.0, 0.0), ParticleSpace::One);
        assert_eq!(v.geometric_product(&v), Multivector::scalar(-3.0));
    }

    #[test]
    fn embed_complex_example() {
        // r = gamma0, s = gamma1: I gamma1 = -gamma0 gamma2 gamma3.
        let k = ComplexFourVector::new(
            FourVector::new(1.0, 0.0, 0.0, 0.0),
            FourVector::new(0.0, 1.0, 0.0, 0.0),
        );
        let got = embed_complex_vector(k, ParticleSpace::One);
        let want = &Multivector::from(Blade(0b0001)) + &Multivector::term(Blade(0b1101), -1.0);
        assert_eq!(got, want);
        assert_eq!(
            embed_complex_vector(ComplexFourVector::ZERO, ParticleSpace::One),
            Multivector::zero()
        );
    }

    #[test]
    fn ideal_projectors() {
        for space in [ParticleSpace::One, ParticleSpace::Two] {
            let plus = ideal_projector(Ideal::Plus, space);
            let minus = ideal_projector(Ideal::Minus, space);
            assert!(plus.geometric_product(&plus).max_abs_diff(&plus) < 1e-15);
            assert!(plus.geometric_product(&minus).is_zero());
            assert_eq!(&plus + &minus, Multivector::scalar(1.0));
        }
    }

    #[test]
    fn weyl_spinor_examples() {
        let one = PauliSpinor::scalar(1.0);
        let zero = PauliSpinor::ZERO;
        assert_eq!(
            weyl_spinor(one, zero, ParticleSpace::One),
            ideal_projector(Ideal::Plus, ParticleSpace::One)
        );
        assert!(weyl_spinor(zero, zero, ParticleSpace::One).is_zero());
        let pi_only = weyl_spinor(zero, one, ParticleSpace::One);
        let want =
            i_sigma(2, ParticleSpace::One) * ideal_projector(Ideal::Minus, ParticleSpace::One);
        assert_eq!(pi_only, want);
        // The pi part is absorbed by the minus ideal.
        let absorbed = &pi_only * &ideal_projector(Ideal::Minus, ParticleSpace::One);
        assert!(absorbed.max_abs_diff(&pi_only) < 1e-15);
    }

    #[test]
    fn minkowski_dot_examples() {
        let e0 = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let e1 = FourVector::new(0.0, 1.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(e0, e0), 1.0);
        assert_eq!(minkowski_dot(e1, e1), -1.0);
        let q = FourVector::new(1.0, 1.0, 0.0, 0.0);
        let r = FourVector::new(1.0, -1.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(q, r), 2.0);
        // Cross-check against the scalar part of the geometric product.
        let prod = embed_vector(q, ParticleSpace::One)
            .geometric_product(&embed_vector(r, ParticleSpace::One));
        assert!((prod.scalar_part() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn pauli_times_i_matches_algebra() {
        let a = PauliSpinor::new(0.3, -0.2, 0.7, 0.1);
        let space = ParticleSpace::One;
        let direct = a.materialize(space) * i_sigma(3, space);
        assert!(direct.max_abs_diff(&a.times_i().materialize(space)) < 1e-15);
    }

    #[test]
    fn vector_parsing() {
        let v: FourVector = "1,2,-0.5,0".parse().unwrap();
        assert_eq!(v, FourVector::new(1.0, 2.0, -0.5, 0.0));
        let k: ComplexFourVector = "0,0,0,0;1,0,0,0".parse().unwrap();
        assert_eq!(k.s, FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!("1,2".parse::<FourVector>().is_err());
        assert!("1,2,a,4".parse::<FourVector>().is_err());
        assert!("1,2,3,4;1,2,3,4;5,6,7,8"
            .parse::<ComplexFourVector>()
            .is_err());
    }
}
