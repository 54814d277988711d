//! Two-particle conformal representation of (complexified) Minkowski
//! points: nilpotent translation generators, translation operators, point
//! construction, and 6-d coordinate extraction.

use crate::error::Error;
use crate::linear::project_span;
use crate::msta::constants;
use crate::multivector::Multivector;
use crate::sta::{
    embed_complex_vector, gamma, ideal_projector, pseudoscalar, ComplexFourVector, FourVector,
    Ideal, ParticleSpace,
};

/// Relative tolerance for recognizing a real conformal-point shape.
const SHAPE_TOL: f64 = 1e-9;

/// Conformal representation of a position: the translated origin state
/// together with the overall scale (the `V - W` factor).
#[derive(Clone, Debug, PartialEq)]
pub struct ConformalPoint {
    pub state: Multivector,
    pub scale: f64,
}

impl ConformalPoint {
    /// Scale zero flags a point at infinity rather than an error.
    pub fn is_infinite(&self) -> bool {
        self.scale == 0.0
    }
}

/// The nilpotent translation generator applied to `phi`:
/// `-k phi I gamma3 (1+sigma3)/2` in the requested space.
///
/// Applying it twice annihilates any argument.
pub fn translation_generator(
    k: ComplexFourVector,
    phi: &Multivector,
    space: ParticleSpace,
) -> Multivector {
    let tail = pseudoscalar(space) * gamma(3, space) * ideal_projector(Ideal::Plus, space);
    -(embed_complex_vector(k, space) * phi * tail)
}

/// Translation by `k` in one particle space: `phi + khat(phi)`.
///
/// Because the generator is nilpotent this equals the exponential of the
/// generator map exactly.
pub fn translate(phi: &Multivector, k: ComplexFourVector, space: ParticleSpace) -> Multivector {
    phi + &translation_generator(k, phi, space)
}

/// The conformal state of position `k`: `scale * T_k^1 T_k^2 eps_bar`.
pub fn conformal_point(k: ComplexFourVector, scale: f64) -> ConformalPoint {
    let eps_bar = &constants().eps_bar;
    let state = translate(
        &translate(eps_bar, k, ParticleSpace::One),
        k,
        ParticleSpace::Two,
    )
    .scaled(scale);
    ConformalPoint { state, scale }
}

/// The 6-d embedding coordinates of a conformal point.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct SixVector {
    pub t: f64,
    pub v: f64,
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SixVector {
    /// Residual of the null-cone constraint T^2+V^2-W^2-X^2-Y^2-Z^2.
    pub fn null_cone_residual(self) -> f64 {
        self.t * self.t + self.v * self.v
            - self.w * self.w
            - self.x * self.x
            - self.y * self.y
            - self.z * self.z
    }
}

/// Coordinates read off a conformal state: the 6-d tuple always, the 4-d
/// position only when `V - W` does not vanish.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointCoordinates {
    pub six: SixVector,
    pub four: Option<FourVector>,
}

/// Basis of the antisymmetric two-particle sector, ordered as
/// `[eps, I^1 eps, eps_bar, I^1 eps_bar, u-block (4), v-block (4)]`.
///
/// The vector blocks tie the two particle spaces together: the `mu`-th
/// u-basis element is `gamma_mu^1 eps_bar I gamma3^1 + gamma_mu^2 eps_bar
/// I gamma3^2`, and the v-elements carry an extra left pseudoscalar and a
/// minus sign.
pub(crate) fn antisymmetric_basis() -> Vec<Multivector> {
    let c = constants();
    let i1 = pseudoscalar(ParticleSpace::One);
    let mut basis = vec![
        c.eps.clone(),
        &i1 * &c.eps,
        c.eps_bar.clone(),
        &i1 * &c.eps_bar,
    ];
    let tail = |space| pseudoscalar(space) * gamma(3, space);
    for mu in 0..4u8 {
        let e1 = gamma(mu, ParticleSpace::One) * &c.eps_bar * tail(ParticleSpace::One);
        let e2 = gamma(mu, ParticleSpace::Two) * &c.eps_bar * tail(ParticleSpace::Two);
        basis.push(&e1 + &e2);
    }
    for mu in 0..4u8 {
        let e1 = pseudoscalar(ParticleSpace::One)
            * gamma(mu, ParticleSpace::One)
            * &c.eps_bar
            * tail(ParticleSpace::One);
        let e2 = pseudoscalar(ParticleSpace::Two)
            * gamma(mu, ParticleSpace::Two)
            * &c.eps_bar
            * tail(ParticleSpace::Two);
        basis.push(-(&e1 + &e2));
    }
    basis
}

pub(crate) struct SectorCoefficients {
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
    pub mu: f64,
    pub u: FourVector,
    pub v: FourVector,
}

pub(crate) fn decompose_antisymmetric(
    state: &Multivector,
) -> Result<(SectorCoefficients, f64), Error> {
    let (coeffs, residual) = project_span(&antisymmetric_basis(), state)?;
    let sector = SectorCoefficients {
        alpha: coeffs[0],
        beta: coeffs[1],
        theta: coeffs[2],
        mu: coeffs[3],
        u: FourVector::new(coeffs[4], coeffs[5], coeffs[6], coeffs[7]),
        v: FourVector::new(coeffs[8], coeffs[9], coeffs[10], coeffs[11]),
    };
    Ok((sector, residual))
}

/// Read the 6-d coordinates (and, for a finite point, the 4-d position)
/// off a conformal state.
///
/// The state must have the real conformal-point shape: decomposition
/// residual and imaginary blocks below `1e-9` of its largest coefficient.
pub fn extract_coordinates(p: &ConformalPoint) -> Result<PointCoordinates, Error> {
    let max_coeff = p.state.max_abs_coeff();
    if max_coeff == 0.0 {
        return Ok(PointCoordinates {
            six: SixVector::default(),
            four: None,
        });
    }
    let (sector, residual) = decompose_antisymmetric(&p.state)?;
    let tol = SHAPE_TOL * max_coeff;
    if residual > tol {
        return Err(Error::Shape { residual });
    }
    let imaginary = sector
        .beta
        .abs()
        .max(sector.mu.abs())
        .max(sector.v.abs_norm());
    if imaginary > tol {
        return Err(Error::Shape {
            residual: imaginary,
        });
    }

    // eps_bar coefficient is V-W, eps coefficient is V+W, and the vector
    // block carries -(V-W) times the position.
    let diff = sector.theta;
    let sum = sector.alpha;
    let six = SixVector {
        t: -sector.u.t,
        v: (sum + diff) / 2.0,
        w: (sum - diff) / 2.0,
        x: -sector.u.x,
        y: -sector.u.y,
        z: -sector.u.z,
    };
    let four = if diff.abs() > tol {
        Some(FourVector::new(
            six.t / diff,
            six.x / diff,
            six.y / diff,
            six.z / diff,
        ))
    } else {
        None
    };
    Ok(PointCoordinates { six, four })
}
