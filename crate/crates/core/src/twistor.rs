//! 1-valence twistors as position-dependent spinor fields, 2-valence
//! incidence twistors, the incidence solver over real and complexified
//! positions, and the spin-0 wave-function decomposition.

use std::str::FromStr;

use thiserror::Error as ThisError;

use crate::complex::ComplexScalar;
use crate::conformal::decompose_antisymmetric;
use crate::error::Error;
use crate::linear::{project_span, solve};
use crate::msta::{constants, quantum_inner};
use crate::multivector::Multivector;
use crate::sta::{
    i_sigma, ideal_projector, minkowski_dot, pseudoscalar, weyl_spinor, ComplexFourVector,
    FourVector, Ideal, ParticleSpace, PauliSpinor,
};

/// Relative tolerance for shape checks and the solver residual.
const RESIDUAL_TOL: f64 = 1e-9;
/// Relative threshold below which a spin-frame factor counts as vanished.
const FRAME_TOL: f64 = 1e-12;
/// Relative threshold on the charge coefficient and the imaginary part of
/// a recovered position.
const REALITY_TOL: f64 = 1e-9;

/// A 1-valence twistor, stored space-agnostically through its primary and
/// projection Pauli spinors and lifted into a particle space on demand.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Twistor {
    pub omega: PauliSpinor,
    pub pi: PauliSpinor,
}

impl Twistor {
    pub fn new(omega: PauliSpinor, pi: PauliSpinor) -> Self {
        Twistor { omega, pi }
    }

    /// A null twistor through the origin: vanishing primary part.
    pub fn null_through_origin(pi: PauliSpinor) -> Self {
        Twistor {
            omega: PauliSpinor::ZERO,
            pi,
        }
    }

    /// Recover `(omega, pi)` from a spinor value in the given space.
    ///
    /// Fails with a shape error if the value is not an even single-space
    /// element of the Weyl form.
    pub fn from_spinor(value: &Multivector, space: ParticleSpace) -> Result<Twistor, Error> {
        let mut basis = Vec::with_capacity(8);
        for slot in 0..8usize {
            let mut c = [0.0; 4];
            c[slot % 4] = 1.0;
            let p = PauliSpinor::new(c[0], c[1], c[2], c[3]);
            if slot < 4 {
                basis.push(p.materialize(space) * ideal_projector(Ideal::Plus, space));
            } else {
                basis.push(
                    p.materialize(space) * i_sigma(2, space) * ideal_projector(Ideal::Minus, space),
                );
            }
        }
        let (c, residual) = project_span(&basis, value)?;
        if residual > RESIDUAL_TOL * value.max_abs_coeff().max(1.0) {
            return Err(Error::Shape { residual });
        }
        Ok(Twistor {
            omega: PauliSpinor::new(c[0], c[1], c[2], c[3]),
            pi: PauliSpinor::new(c[4], c[5], c[6], c[7]),
        })
    }

    fn max_abs(self) -> f64 {
        self.omega.max_abs().max(self.pi.max_abs())
    }
}

/// The spinor field of a twistor evaluated at position `k`:
/// `psi + k psi I gamma3 (1+sigma3)/2` in the requested space.
pub fn twistor_value(tw: &Twistor, k: ComplexFourVector, space: ParticleSpace) -> Multivector {
    let psi = weyl_spinor(tw.omega, tw.pi, space);
    &psi - &crate::conformal::translation_generator(k, &psi, space)
}

/// Right projection onto `(1+sigma3)/2`: the primary 2-spinor of a value.
pub fn primary_part(value: &Multivector, space: ParticleSpace) -> Multivector {
    value * ideal_projector(Ideal::Plus, space)
}

/// Single-space inner product of two twistor values taken at the same
/// position; vanishing means the twistors are incident.
pub fn incidence_product(z: &Twistor, x: &Twistor, k: ComplexFourVector) -> ComplexScalar {
    let space = ParticleSpace::One;
    let zv = twistor_value(z, k, space);
    let xv = twistor_value(x, k, space);
    let prod = xv.reverse().geometric_product(&zv);
    let re = prod.scalar_part();
    let im = -prod.geometric_product(&i_sigma(3, space)).scalar_part();
    ComplexScalar::new(re, im)
}

/// The antisymmetric 2-particle product of two twistors evaluated at `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoValenceTwistor {
    pub state: Multivector,
}

impl TwoValenceTwistor {
    pub fn from_state(state: Multivector) -> Self {
        TwoValenceTwistor { state }
    }

    /// Projections into the four right ideals, ordered `(++, +-, -+, --)`.
    pub fn ideal_projections(&self) -> [Multivector; 4] {
        let proj = |i1, i2| {
            &self.state
                * &(ideal_projector(i1, ParticleSpace::One)
                    * ideal_projector(i2, ParticleSpace::Two))
        };
        [
            proj(Ideal::Plus, Ideal::Plus),
            proj(Ideal::Plus, Ideal::Minus),
            proj(Ideal::Minus, Ideal::Plus),
            proj(Ideal::Minus, Ideal::Minus),
        ]
    }

    /// The complex factor `c + d j` carried by the `(--)` ideal block,
    /// canonicalized through `eps_bar I sigma3 = -I eps_bar`.
    ///
    /// It vanishes exactly when the constituent rays are parallel or the
    /// state sits at infinity.
    pub fn spin_frame_factor(&self) -> Result<ComplexScalar, Error> {
        let block = &self.ideal_projections()[3];
        let c = constants();
        let basis = [
            c.eps_bar.clone(),
            pseudoscalar(ParticleSpace::One) * &c.eps_bar,
        ];
        let (coeffs, residual) = project_span(&basis, block)?;
        if residual > RESIDUAL_TOL * self.state.max_abs_coeff().max(1.0) {
            return Err(Error::Shape { residual });
        }
        Ok(ComplexScalar::new(coeffs[0], -coeffs[1]))
    }

    /// Divide out the spin-frame factor so the `(--)` block becomes
    /// exactly `eps_bar`.
    pub fn normalized(&self) -> Result<TwoValenceTwistor, Error> {
        let factor = self.spin_frame_factor()?;
        let inv = factor.inverse()?;
        Ok(self.apply_complex(inv))
    }

    /// Right multiplication by `re + im * I sigma3^1`, the complex scalar
    /// action on correlated states.
    pub fn apply_complex(&self, z: ComplexScalar) -> TwoValenceTwistor {
        let mult = &Multivector::scalar(z.re) + &i_sigma(3, ParticleSpace::One).scaled(z.im);
        TwoValenceTwistor {
            state: &self.state * &mult,
        }
    }

    pub fn quantum_inner(&self, other: &TwoValenceTwistor) -> ComplexScalar {
        quantum_inner(&self.state, &other.state)
    }
}

/// `(Z^1 X^2 - X^1 Z^2) E` with both fields evaluated at position `k`.
pub fn valence2(z: &Twistor, x: &Twistor, k: ComplexFourVector) -> TwoValenceTwistor {
    let z1 = twistor_value(z, k, ParticleSpace::One);
    let z2 = twistor_value(z, k, ParticleSpace::Two);
    let x1 = twistor_value(x, k, ParticleSpace::One);
    let x2 = twistor_value(x, k, ParticleSpace::Two);
    let raw = &(&z1 * &x2) - &(&x1 * &z2);
    TwoValenceTwistor {
        state: &raw * &constants().correlator,
    }
}

fn primary_functionals(tw: &Twistor, k: ComplexFourVector) -> [f64; 4] {
    let space = ParticleSpace::One;
    let s = primary_part(&twistor_value(tw, k, space), space);
    [
        2.0 * s.scalar_part(),
        -2.0 * s.geometric_product(&i_sigma(1, space)).scalar_part(),
        -2.0 * s.geometric_product(&i_sigma(2, space)).scalar_part(),
        -2.0 * s.geometric_product(&i_sigma(3, space)).scalar_part(),
    ]
}

fn scaled_twistor(tw: &Twistor) -> Result<Twistor, Error> {
    let norm = tw.max_abs();
    if norm == 0.0 {
        return Err(Error::NoUniqueIncidence);
    }
    Ok(Twistor {
        omega: tw.omega * (1.0 / norm),
        pi: tw.pi * (1.0 / norm),
    })
}

/// Solve for the complexified position at which the primary parts of both
/// twistors vanish.
///
/// The vanishing conditions are affine in the eight position components,
/// so the 8x8 system is assembled exactly by sampling the coordinate
/// directions and solved by Gaussian elimination with partial pivoting.
pub fn solve_incidence(z: &Twistor, x: &Twistor) -> Result<ComplexFourVector, Error> {
    let z = scaled_twistor(z)?;
    let x = scaled_twistor(x)?;
    let stack = |k: ComplexFourVector| -> [f64; 8] {
        let a = primary_functionals(&z, k);
        let b = primary_functionals(&x, k);
        [a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]]
    };
    let base = stack(ComplexFourVector::ZERO);
    let mut matrix = vec![vec![0.0f64; 8]; 8];
    for col in 0..8 {
        let mut c = [0.0; 8];
        c[col] = 1.0;
        let k = ComplexFourVector::new(
            FourVector::from_components([c[0], c[1], c[2], c[3]]),
            FourVector::from_components([c[4], c[5], c[6], c[7]]),
        );
        let probe = stack(k);
        for row in 0..8 {
            matrix[row][col] = probe[row] - base[row];
        }
    }
    let rhs: Vec<f64> = base.iter().map(|v| -v).collect();
    let sol = solve(matrix, rhs)?;
    let position = ComplexFourVector::new(
        FourVector::from_components([sol[0], sol[1], sol[2], sol[3]]),
        FourVector::from_components([sol[4], sol[5], sol[6], sol[7]]),
    );
    for tw in [&z, &x] {
        let value = twistor_value(tw, position, ParticleSpace::One);
        let residual = primary_part(&value, ParticleSpace::One).max_abs_coeff();
        if residual > RESIDUAL_TOL * value.max_abs_coeff().max(1.0) {
            return Err(Error::NoUniqueIncidence);
        }
    }
    Ok(position)
}

/// The spin-0 wave-function coefficients of an antisymmetric 2-particle
/// state: `(alpha + I beta) eps + (theta + I mu) eps_bar` plus the vector
/// blocks `(u - I v)` in both spaces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KleinGordonCoefficients {
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
    pub mu: f64,
    pub u: FourVector,
    pub v: FourVector,
}

impl KleinGordonCoefficients {
    /// The complex scalar field is charged when its imaginary part is
    /// non-negligible relative to the coefficient scale.
    pub fn is_charged(&self) -> bool {
        let scale = 1.0f64
            .max(self.alpha.abs())
            .max(self.theta.abs())
            .max(self.u.abs_norm())
            .max(self.v.abs_norm());
        self.beta.abs() > REALITY_TOL * scale
    }
}

/// Project a state onto the antisymmetric wave-function basis and return
/// the twelve coefficients.
pub fn bargmann_wigner_decompose(psi: &Multivector) -> Result<KleinGordonCoefficients, Error> {
    let (sector, residual) = decompose_antisymmetric(psi)?;
    if residual > RESIDUAL_TOL * psi.max_abs_coeff().max(1.0) {
        return Err(Error::Shape { residual });
    }
    Ok(KleinGordonCoefficients {
        alpha: sector.alpha,
        beta: sector.beta,
        theta: sector.theta,
        mu: sector.mu,
        u: sector.u,
        v: sector.v,
    })
}

/// Diagnosis of the locus a 2-valence twistor represents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Locus {
    /// A finite point with the recovered position; `event` is true when
    /// the position lies in real Minkowski space.
    Finite {
        event: bool,
        position: ComplexFourVector,
    },
    /// The spin-frame factor vanishes: parallel rays or a point at
    /// infinity.
    Infinite,
}

/// Decide whether a conformal-point-shaped 2-valence twistor represents an
/// event in real Minkowski space, reporting the recovered position.
pub fn is_event(r: &TwoValenceTwistor) -> Result<Locus, Error> {
    let max_coeff = r.state.max_abs_coeff();
    if max_coeff == 0.0 {
        return Ok(Locus::Infinite);
    }
    let factor = r.spin_frame_factor()?;
    if factor.modulus() <= FRAME_TOL * max_coeff.max(1.0) {
        return Ok(Locus::Infinite);
    }
    let normalized = r.apply_complex(factor.inverse()?);
    let kg = bargmann_wigner_decompose(&normalized.state)?;
    let r_sol = -kg.u;
    let s_sol = kg.v;
    // A conformal point must reproduce -k kbar on the eps block.
    let tol = RESIDUAL_TOL * normalized.state.max_abs_coeff().max(1.0);
    let alpha_want = -(minkowski_dot(r_sol, r_sol) - minkowski_dot(s_sol, s_sol));
    let beta_want = -2.0 * minkowski_dot(r_sol, s_sol);
    let mismatch = (kg.alpha - alpha_want)
        .abs()
        .max((kg.beta - beta_want).abs())
        .max((kg.theta - 1.0).abs())
        .max(kg.mu.abs());
    if mismatch > tol {
        return Err(Error::Shape { residual: mismatch });
    }
    let event = s_sol.abs_norm() < REALITY_TOL * (1.0 + r_sol.abs_norm());
    Ok(Locus::Finite {
        event,
        position: ComplexFourVector::new(r_sol, s_sol),
    })
}

/// Errors from the `w0,w1,w2,w3|p0,p1,p2,p3` twistor syntax.
#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum TwistorParseError {
    #[error("expected `omega|pi` with two 4-component spinors")]
    MissingSeparator,
    #[error("expected 4 comma-separated components, found {0}")]
    WrongArity(usize),
    #[error("invalid component `{0}`")]
    InvalidComponent(String),
}

fn parse_spinor(text: &str) -> Result<PauliSpinor, TwistorParseError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(TwistorParseError::WrongArity(parts.len()));
    }
    let mut c = [0.0; 4];
    for (slot, part) in c.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| TwistorParseError::InvalidComponent(part.to_string()))?;
    }
    Ok(PauliSpinor::new(c[0], c[1], c[2], c[3]))
}

impl FromStr for Twistor {
    type Err = TwistorParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (omega, pi) = s
            .split_once('|')
            .ok_or(TwistorParseError::MissingSeparator)?;
        Ok(Twistor::new(parse_spinor(omega)?, parse_spinor(pi)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::{conformal_point, translate};
    use crate::msta::{lift, massless_states};

    fn origin_ray(p: [f64; 4]) -> Twistor {
        Twistor::null_through_origin(PauliSpinor::new(p[0], p[1], p[2], p[3]))
    }

    fn real(t: f64, x: f64, y: f64, z: f64) -> ComplexFourVector {
        ComplexFourVector::real(FourVector::new(t, x, y, z))
    }

    #[test]
    fn value_at_origin_is_the_weyl_spinor() {
        let tw = Twistor::new(
            PauliSpinor::new(0.3, -0.2, 0.7, 0.1),
            PauliSpinor::new(0.4, 0.8, -0.5, 0.6),
        );
        let v = twistor_value(&tw, ComplexFourVector::ZERO, ParticleSpace::One);
        assert_eq!(v, weyl_spinor(tw.omega, tw.pi, ParticleSpace::One));
    }

    #[test]
    fn value_expands_to_the_field_formula() {
        let tw = Twistor::null_through_origin(PauliSpinor::scalar(1.0));
        let k = real(1.0, 0.0, 0.0, 0.0);
        let psi = weyl_spinor(
            PauliSpinor::ZERO,
            PauliSpinor::scalar(1.0),
            ParticleSpace::One,
        );
        let tail = pseudoscalar(ParticleSpace::One)
            * crate::sta::gamma(3, ParticleSpace::One)
            * ideal_projector(Ideal::Plus, ParticleSpace::One);
        let want = &psi + &(crate::sta::gamma(0, ParticleSpace::One) * &psi * &tail);
        assert_eq!(twistor_value(&tw, k, ParticleSpace::One), want);
    }

    #[test]
    fn value_round_trips_through_translation() {
        let tw = origin_ray([0.2, -0.9, 0.4, 0.3]);
        let k = real(0.7, 0.1, -0.3, 0.5);
        let there = twistor_value(&tw, k, ParticleSpace::One);
        // evaluating at k is translating the field by -k
        let back = translate(&there, k, ParticleSpace::One);
        let origin = twistor_value(&tw, ComplexFourVector::ZERO, ParticleSpace::One);
        assert!(back.max_abs_diff(&origin) < 1e-14);
    }

    #[test]
    fn primary_part_examples() {
        let one = PauliSpinor::scalar(1.0);
        let plus = ideal_projector(Ideal::Plus, ParticleSpace::One);
        let omega_only = weyl_spinor(one, PauliSpinor::ZERO, ParticleSpace::One);
        assert!(primary_part(&omega_only, ParticleSpace::One).max_abs_diff(&plus) < 1e-15);
        let pi_only = weyl_spinor(PauliSpinor::ZERO, one, ParticleSpace::One);
        assert!(primary_part(&pi_only, ParticleSpace::One).is_zero());
    }

    #[test]
    fn from_spinor_round_trips() {
        let tw = Twistor::new(
            PauliSpinor::new(0.5, -0.1, 0.2, 0.9),
            PauliSpinor::new(-0.4, 0.3, 0.8, 0.0),
        );
        let v = twistor_value(&tw, real(0.3, 0.8, -0.1, 0.5), ParticleSpace::One);
        let recovered = Twistor::from_spinor(&v, ParticleSpace::One).unwrap();
        // the value at a position is itself a Weyl spinor of a translated twistor
        let direct = twistor_value(&recovered, ComplexFourVector::ZERO, ParticleSpace::One);
        assert!(direct.max_abs_diff(&v) < 1e-12);
        assert!(Twistor::from_spinor(
            &crate::sta::gamma(0, ParticleSpace::One),
            ParticleSpace::One
        )
        .is_err());
    }

    #[test]
    fn origin_rays_meet_at_origin() {
        let z = origin_ray([1.0, 0.0, 0.0, 0.0]);
        let x = origin_ray([0.0, 1.0, 0.0, 0.0]);
        let ip = incidence_product(&z, &x, ComplexFourVector::ZERO);
        assert!(ip.max_abs_diff(ComplexScalar::ZERO) < 1e-14);
        // a null ray is incident with itself
        let self_ip = incidence_product(&z, &z, ComplexFourVector::ZERO);
        assert!(self_ip.max_abs_diff(ComplexScalar::ZERO) < 1e-14);
        let k = solve_incidence(&z, &x).unwrap();
        assert!(k.r.abs_norm() < 1e-12 && k.s.abs_norm() < 1e-12);
    }

    #[test]
    fn generic_twistors_are_not_incident() {
        let z = Twistor::new(
            PauliSpinor::new(0.3, -0.2, 0.7, 0.1),
            PauliSpinor::new(0.4, 0.8, -0.5, 0.6),
        );
        let x = Twistor::new(
            PauliSpinor::new(0.9, 0.1, 0.2, -0.4),
            PauliSpinor::new(0.2, -0.6, 0.3, 0.8),
        );
        let ip = incidence_product(&z, &x, ComplexFourVector::ZERO);
        assert!((ip.re - 0.43).abs() < 1e-12);
        assert!((ip.im - (-0.105)).abs() < 1e-12);
    }

    #[test]
    fn valence2_of_origin_rays_sits_in_the_minus_ideal() {
        let z = origin_ray([0.2, -0.9, 0.4, 0.3]);
        let x = origin_ray([0.7, 0.1, -0.6, 0.5]);
        let r = valence2(&z, &x, ComplexFourVector::ZERO);
        let blocks = r.ideal_projections();
        assert!(blocks[0].max_abs_coeff() < 1e-15);
        assert!(blocks[1].max_abs_coeff() < 1e-15);
        assert!(blocks[2].max_abs_coeff() < 1e-15);
        let factor = r.spin_frame_factor().unwrap();
        assert!(factor.modulus() > 1e-6);
        // cross-check against the quantum inner product with eps
        let (eps, _) = massless_states();
        let via_inner = quantum_inner(&eps, &r.state);
        assert!(via_inner.max_abs_diff(factor * 0.5) < 1e-12);
        // resolution of identity
        let sum = blocks.iter().fold(Multivector::zero(), |acc, b| &acc + b);
        assert!(sum.max_abs_diff(&r.state) < 1e-12);
    }

    #[test]
    fn valence2_is_antisymmetric() {
        let z = origin_ray([0.2, -0.9, 0.4, 0.3]);
        let x = origin_ray([0.7, 0.1, -0.6, 0.5]);
        let k = real(0.4, -0.2, 0.3, 0.7);
        let zx = valence2(&z, &x, k);
        let xz = valence2(&x, &z, k);
        assert_eq!(zx.state, -&xz.state);
    }

    #[test]
    fn parallel_rays_have_vanishing_frame_and_no_unique_incidence() {
        let z = origin_ray([0.2, -0.9, 0.4, 0.3]);
        let r = valence2(&z, &z, ComplexFourVector::ZERO);
        let factor = r.spin_frame_factor().unwrap();
        assert!(factor.modulus() < 1e-14);
        assert_eq!(solve_incidence(&z, &z), Err(Error::NoUniqueIncidence));
        assert_eq!(is_event(&r), Ok(Locus::Infinite));
    }

    #[test]
    fn solver_round_trips_a_real_point() {
        let q = FourVector::new(0.3, 0.8, -0.1, 0.5);
        let z0 = origin_ray([0.2, -0.9, 0.4, 0.3]);
        let x0 = origin_ray([0.7, 0.1, -0.6, 0.5]);
        // twistors whose spinors are the original fields evaluated at -q
        let z = Twistor::from_spinor(
            &twistor_value(&z0, real(-q.t, -q.x, -q.y, -q.z), ParticleSpace::One),
            ParticleSpace::One,
        )
        .unwrap();
        let x = Twistor::from_spinor(
            &twistor_value(&x0, real(-q.t, -q.x, -q.y, -q.z), ParticleSpace::One),
            ParticleSpace::One,
        )
        .unwrap();
        let k = solve_incidence(&z, &x).unwrap();
        assert!((k.r - q).abs_norm() < 1e-12);
        assert!(k.s.abs_norm() < 1e-12);

        let r12 = valence2(&z, &x, ComplexFourVector::ZERO);
        match is_event(&r12).unwrap() {
            Locus::Finite { event, position } => {
                assert!(event);
                assert!((position.r - q).abs_norm() < 1e-9);
            }
            Locus::Infinite => panic!("expected a finite event"),
        }
        let kg = bargmann_wigner_decompose(&r12.normalized().unwrap().state).unwrap();
        assert!(!kg.is_charged());
    }

    #[test]
    fn complex_points_are_charged_non_events() {
        let k = ComplexFourVector::new(
            FourVector::new(0.3, 0.8, -0.1, 0.5),
            FourVector::new(0.0, 0.3, 0.0, 0.0),
        );
        let z0 = origin_ray([0.2, -0.9, 0.4, 0.3]);
        let x0 = origin_ray([0.7, 0.1, -0.6, 0.5]);
        let z = Twistor::from_spinor(
            &twistor_value(&z0, -k, ParticleSpace::One),
            ParticleSpace::One,
        )
        .unwrap();
        let x = Twistor::from_spinor(
            &twistor_value(&x0, -k, ParticleSpace::One),
            ParticleSpace::One,
        )
        .unwrap();
        let sol = solve_incidence(&z, &x).unwrap();
        assert!((sol.r - k.r).abs_norm() < 1e-12);
        assert!((sol.s - k.s).abs_norm() < 1e-12);

        let r12 = valence2(&z, &x, ComplexFourVector::ZERO);
        match is_event(&r12).unwrap() {
            Locus::Finite { event, position } => {
                assert!(!event);
                assert!((position.s - k.s).abs_norm() < 1e-9);
            }
            Locus::Infinite => panic!("expected a finite locus"),
        }
        let kg = bargmann_wigner_decompose(&r12.normalized().unwrap().state).unwrap();
        assert!(kg.is_charged());
    }

    #[test]
    fn infinity_twistor_diagnoses_as_infinite() {
        let (eps, _) = massless_states();
        let r = TwoValenceTwistor::from_state(eps);
        assert_eq!(is_event(&r), Ok(Locus::Infinite));
    }

    #[test]
    fn decompose_examples() {
        let (_, eps_bar) = massless_states();
        let kg = bargmann_wigner_decompose(&eps_bar).unwrap();
        assert!((kg.theta - 1.0).abs() < 1e-12);
        assert!(kg.alpha.abs() < 1e-12);
        assert!(kg.beta.abs() < 1e-12);
        assert!(kg.mu.abs() < 1e-12);
        assert!(kg.u.abs_norm() < 1e-12 && kg.v.abs_norm() < 1e-12);

        // real event at r with unit spin frame: alpha = -|r|^2, u = -r
        let rv = FourVector::new(0.5, -0.3, 0.8, 0.1);
        let p = conformal_point(ComplexFourVector::real(rv), 1.0);
        let kg = bargmann_wigner_decompose(&p.state).unwrap();
        assert!((kg.alpha + minkowski_dot(rv, rv)).abs() < 1e-12);
        assert!(kg.beta.abs() < 1e-12);
        assert!((kg.theta - 1.0).abs() < 1e-12);
        assert!((kg.u + rv).abs_norm() < 1e-12);
        assert!(!kg.is_charged());

        // purely pseudoscalar position r=0, s=gamma0: alpha = +1, v = s
        let s = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let p = conformal_point(ComplexFourVector::new(FourVector::ZERO, s), 1.0);
        let kg = bargmann_wigner_decompose(&p.state).unwrap();
        assert!((kg.alpha - 1.0).abs() < 1e-12);
        assert!(kg.beta.abs() < 1e-12);
        assert!(kg.u.abs_norm() < 1e-12);
        assert!((kg.v - s).abs_norm() < 1e-12);

        assert!(bargmann_wigner_decompose(&crate::sta::gamma(0, ParticleSpace::One)).is_err());
    }

    #[test]
    fn lifted_values_match_per_space_evaluation() {
        let tw = Twistor::new(
            PauliSpinor::new(0.5, -0.1, 0.2, 0.9),
            PauliSpinor::new(-0.4, 0.3, 0.8, 0.0),
        );
        let k = real(0.2, -0.6, 0.4, 0.1);
        let v1 = twistor_value(&tw, k, ParticleSpace::One);
        let v2 = twistor_value(&tw, k, ParticleSpace::Two);
        assert_eq!(lift(&v1, ParticleSpace::Two).unwrap(), v2);
    }

    #[test]
    fn twistor_parsing() {
        let tw: Twistor = "1,0,0,0|0,1,0,0".parse().unwrap();
        assert_eq!(tw.omega, PauliSpinor::scalar(1.0));
        assert_eq!(tw.pi, PauliSpinor::new(0.0, 1.0, 0.0, 0.0));
        assert!("1,0,0,0".parse::<Twistor>().is_err());
        assert!("1,0,0|0,1,0,0".parse::<Twistor>().is_err());
        assert!("1,0,0,a|0,1,0,0".parse::<Twistor>().is_err());
    }
}
