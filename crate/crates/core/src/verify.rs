//! The identity-verification harness behind `msta verify`.
//!
//! Every algebraic relation the library promises is encoded as a named
//! check that reports its worst absolute error. Checks draw their random
//! samples from per-check seeded streams, so the report is byte-identical
//! for a given seed regardless of scheduling, and the records are sorted
//! by id.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::complex::ComplexScalar;
use crate::conformal::{conformal_point, extract_coordinates, translate, translation_generator};
use crate::cosmo::{
    bang_time, cosmo_twistors, distance, distance_closed_form, finite_point_condition,
    frw_twistors, point_twistor, Space,
};
use crate::msta::{constants, lift, quantum_inner};
use crate::multivector::Multivector;
use crate::sample;
use crate::sta::{
    embed_complex_vector, embed_vector, gamma, i_sigma, minkowski_dot, pseudoscalar, sigma,
    weyl_spinor, ComplexFourVector, FourVector, ParticleSpace,
};
use crate::twistor::{
    bargmann_wigner_decompose, incidence_product, is_event, solve_incidence, twistor_value,
    valence2, Locus, Twistor, TwoValenceTwistor,
};

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub lhs: String,
    pub rhs: String,
    pub max_abs_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Suite configuration.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Seed for every randomized check.
    pub seed: u64,
    /// Keep only checks whose id contains this substring.
    pub filter: Option<String>,
    /// Replace every per-check tolerance with this value.
    pub tolerance_override: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            filter: None,
            tolerance_override: None,
        }
    }
}

struct Check {
    id: &'static str,
    lhs: &'static str,
    rhs: &'static str,
    tolerance: f64,
    run: fn(&mut ChaCha8Rng) -> f64,
}

fn execute(check: &Check, cfg: &VerifyConfig) -> CheckRecord {
    let mut rng = sample::seeded_rng(cfg.seed, check.id);
    let max_abs_err = (check.run)(&mut rng);
    let tolerance = cfg.tolerance_override.unwrap_or(check.tolerance);
    CheckRecord {
        id: check.id.to_string(),
        lhs: check.lhs.to_string(),
        rhs: check.rhs.to_string(),
        max_abs_err,
        tolerance,
        pass: max_abs_err <= tolerance,
    }
}

fn selected(cfg: &VerifyConfig) -> Vec<Check> {
    checks()
        .into_iter()
        .filter(|c| match &cfg.filter {
            Some(f) => c.id.contains(f.as_str()),
            None => true,
        })
        .collect()
}

/// Run the suite, in parallel when the `parallel` feature is enabled.
pub fn run_suite(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let list = selected(cfg);
    #[cfg(feature = "parallel")]
    let mut records: Vec<CheckRecord> = list.par_iter().map(|c| execute(c, cfg)).collect();
    #[cfg(not(feature = "parallel"))]
    let mut records: Vec<CheckRecord> = list.iter().map(|c| execute(c, cfg)).collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

/// Single-threaded variant, kept callable regardless of features so the
/// bench suite can compare both paths.
pub fn run_suite_sequential(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let list = selected(cfg);
    let mut records: Vec<CheckRecord> = list.iter().map(|c| execute(c, cfg)).collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

// ---------------------------------------------------------------------
// helpers

const ONE: ParticleSpace = ParticleSpace::One;
const TWO: ParticleSpace = ParticleSpace::Two;

fn diff(a: &Multivector, b: &Multivector) -> f64 {
    a.max_abs_diff(b)
}

fn cdiff(a: ComplexScalar, b: ComplexScalar) -> f64 {
    a.max_abs_diff(b)
}

fn real(v: FourVector) -> ComplexFourVector {
    ComplexFourVector::real(v)
}

/// Explicit expansion of a conformal point, the dual route to the
/// translation construction:
///
/// ```text
/// -(k kbar) eps - k^1 eps_bar I gamma3^1 - k^2 eps_bar I gamma3^2 + eps_bar
/// ```
///
/// with the complex coefficient of the eps block riding on the left
/// pseudoscalar.
fn explicit_point(k: ComplexFourVector, scale: f64) -> Multivector {
    let c = constants();
    let a = -(minkowski_dot(k.r, k.r) - minkowski_dot(k.s, k.s));
    let b = -2.0 * minkowski_dot(k.r, k.s);
    let mut out = &(&c.eps.scaled(a) + &(pseudoscalar(ONE) * &c.eps).scaled(b)) + &c.eps_bar;
    for space in [ONE, TWO] {
        out = &out
            - &(embed_complex_vector(k, space)
                * &c.eps_bar
                * pseudoscalar(space)
                * gamma(3, space));
    }
    out.scaled(scale)
}

/// Two twistors incident at `k`: the fields of two random origin rays
/// evaluated at `-k` and re-read as twistor spinors. Projection parts too
/// close to parallel are resampled.
fn incident_pair(rng: &mut ChaCha8Rng, k: ComplexFourVector) -> (Twistor, Twistor) {
    loop {
        let pi = sample::pauli_rotor(rng);
        let eta = sample::pauli_spinor(rng);
        let z0 = Twistor::null_through_origin(pi);
        let x0 = Twistor::null_through_origin(eta);
        let frame = valence2(&z0, &x0, ComplexFourVector::ZERO)
            .spin_frame_factor()
            .unwrap_or(ComplexScalar::ZERO);
        if frame.modulus() < 0.1 {
            continue;
        }
        let z = Twistor::from_spinor(&twistor_value(&z0, -k, ONE), ONE);
        let x = Twistor::from_spinor(&twistor_value(&x0, -k, ONE), ONE);
        if let (Ok(z), Ok(x)) = (z, x) {
            return (z, x);
        }
    }
}

// ---------------------------------------------------------------------
// clifford kernel

fn check_metric(_rng: &mut ChaCha8Rng) -> f64 {
    let eta = [1.0, -1.0, -1.0, -1.0];
    let mut worst = 0.0f64;
    for space in [ONE, TWO] {
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let a = gamma(mu, space);
                let b = gamma(nu, space);
                let sum = &(&a * &b) + &(&b * &a);
                let want = if mu == nu {
                    Multivector::scalar(2.0 * eta[mu as usize])
                } else {
                    Multivector::zero()
                };
                worst = worst.max(diff(&sum, &want));
            }
        }
    }
    worst
}

fn check_cross_anticommute(_rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            let a = gamma(mu, ONE);
            let b = gamma(nu, TWO);
            let sum = &(&a * &b) + &(&b * &a);
            worst = worst.max(sum.max_abs_coeff());
        }
    }
    worst
}

fn check_associativity(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let a = sample::sparse_multivector(rng, 12);
        let b = sample::sparse_multivector(rng, 12);
        let c = sample::sparse_multivector(rng, 12);
        let left = (&a * &b) * &c;
        let right = &a * (&b * &c);
        let scale = left.max_abs_coeff().max(1.0);
        worst = worst.max(diff(&left, &right) / scale);
    }
    worst
}

fn check_reversion(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..60 {
        let a = sample::sparse_multivector(rng, 10);
        let b = sample::sparse_multivector(rng, 10);
        let prod = &a * &b;
        let scale = prod.max_abs_coeff().max(1.0);
        worst = worst.max(diff(&prod.reverse(), &(&b.reverse() * &a.reverse())) / scale);
        worst = worst.max(diff(&a.reverse().reverse(), &a));
    }
    worst
}

fn check_exp_rotor(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    let mut angles = vec![std::f64::consts::PI / 3.0];
    for _ in 0..10 {
        angles.push(rng.gen_range(-2.0..2.0));
    }
    for (i, theta) in angles.into_iter().enumerate() {
        let k = 1 + (i % 3) as u8;
        let space = if i % 2 == 0 { ONE } else { TWO };
        let generator = i_sigma(k, space);
        let got = generator.scaled(theta).exp_series(1e-15).unwrap();
        let want = &Multivector::scalar(theta.cos()) + &generator.scaled(theta.sin());
        worst = worst.max(diff(&got, &want));
    }
    worst
}

fn check_exp_nilpotent(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    let null = &gamma(0, ONE) + &gamma(1, ONE);
    worst = worst.max(diff(
        &null.exp_series(1e-15).unwrap(),
        &(&Multivector::scalar(1.0) + &null),
    ));
    for _ in 0..10 {
        let x: f64 = rng.gen_range(-1.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0);
        let z: f64 = rng.gen_range(-1.0..1.0);
        let t = (x * x + y * y + z * z).sqrt();
        let n = embed_vector(FourVector::new(t, x, y, z), TWO);
        worst = worst.max(diff(
            &n.exp_series(1e-15).unwrap(),
            &(&Multivector::scalar(1.0) + &n),
        ));
    }
    worst
}

// ---------------------------------------------------------------------
// single-particle layer

fn check_embed_minkowski(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let q = sample::four_vector(rng, 1.0);
        let r = sample::four_vector(rng, 1.0);
        let prod = embed_vector(q, ONE).geometric_product(&embed_vector(r, ONE));
        worst = worst.max((prod.scalar_part() - minkowski_dot(q, r)).abs());
    }
    worst
}

fn check_weyl_phase(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let space = if i % 2 == 0 { ONE } else { TWO };
        let omega = sample::pauli_spinor(rng);
        let pi = sample::pauli_spinor(rng);
        let psi = weyl_spinor(omega, pi, space);
        let rotated = &psi * &i_sigma(3, space);
        let rebuilt = weyl_spinor(omega.times_i(), -pi.times_i(), space);
        worst = worst.max(diff(&rotated, &rebuilt));
    }
    worst
}

// ---------------------------------------------------------------------
// two-particle layer

fn check_correlator(_rng: &mut ChaCha8Rng) -> f64 {
    let e = &constants().correlator;
    let mut worst = diff(&e.geometric_product(e), e);
    worst = worst.max((e.scalar_part() - 0.5).abs());
    worst.max(diff(e, &(&e.grade_part(0) + &e.grade_part(4))))
}

fn check_complex_structure(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let j = &c.complex_structure;
    let mut worst = diff(&(j * j), &-&c.correlator);
    for space in [ONE, TWO] {
        worst = worst.max(diff(&(&c.correlator * &i_sigma(3, space)), j));
    }
    worst
}

fn check_inner_unit_norm(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    cdiff(
        quantum_inner(&c.correlator, &c.correlator),
        ComplexScalar::ONE,
    )
}

fn check_singlet_condition(_rng: &mut ChaCha8Rng) -> f64 {
    let chi = &constants().chi;
    let mut worst = 0.0f64;
    for k in 1..=3u8 {
        let lhs = i_sigma(k, ONE) * chi;
        let rhs = -(i_sigma(k, TWO) * chi);
        worst = worst.max(diff(&lhs, &rhs));
    }
    worst
}

fn check_singlet_norm(_rng: &mut ChaCha8Rng) -> f64 {
    let chi = &constants().chi;
    cdiff(quantum_inner(chi, chi), ComplexScalar::ONE)
}

fn check_singlet_rotation(rng: &mut ChaCha8Rng) -> f64 {
    let chi = &constants().chi;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let m = sample::pauli_rotor(rng);
        let action = m.materialize(ONE) * m.materialize(TWO) * chi;
        worst = worst.max(diff(&action, chi));
    }
    worst
}

fn check_zeta_norm(_rng: &mut ChaCha8Rng) -> f64 {
    let zeta = &constants().zeta;
    cdiff(quantum_inner(zeta, zeta), ComplexScalar::ONE)
}

fn check_zeta_exchange(rng: &mut ChaCha8Rng) -> f64 {
    let zeta = &constants().zeta;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let m1 = sample::even_element(rng, ONE);
        let m2 = lift(&m1, TWO).unwrap();
        worst = worst.max(diff(&(&m1 * zeta), &(&m2.reverse() * zeta)));
    }
    worst
}

fn check_zeta_lorentz(rng: &mut ChaCha8Rng) -> f64 {
    let zeta = &constants().zeta;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r1 = sample::rotor(rng, ONE);
        let r2 = lift(&r1, TWO).unwrap();
        worst = worst.max(diff(&(&(&r1 * &r2) * zeta), zeta));
    }
    worst
}

fn check_zeta_split(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    diff(&c.zeta, &(&c.eps + &c.eps_bar))
}

fn check_massless_null_norm(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    cdiff(quantum_inner(&c.eps, &c.eps), ComplexScalar::ZERO).max(cdiff(
        quantum_inner(&c.eps_bar, &c.eps_bar),
        ComplexScalar::ZERO,
    ))
}

fn check_massless_cross_norm(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let half = ComplexScalar::new(0.5, 0.0);
    cdiff(quantum_inner(&c.eps, &c.eps_bar), half)
        .max(cdiff(quantum_inner(&c.eps_bar, &c.eps), half))
}

fn check_massless_conjugation(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let conj = &c.eps_bar * &(sigma(1, ONE) * sigma(1, TWO));
    diff(&c.eps, &conj)
}

fn check_massless_complex_action(_rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let mut worst = 0.0f64;
    for space in [ONE, TWO] {
        let lhs = &c.eps * &i_sigma(3, space);
        let rhs = pseudoscalar(space) * &c.eps;
        worst = worst.max(diff(&lhs, &rhs));
        let lhs = &c.eps_bar * &i_sigma(3, space);
        let rhs = -(pseudoscalar(space) * &c.eps_bar);
        worst = worst.max(diff(&lhs, &rhs));
    }
    worst
}

fn check_massless_explicit(_rng: &mut ChaCha8Rng) -> f64 {
    use crate::sta::{ideal_projector, Ideal};
    let c = constants();
    let explicit = |ideal| {
        (&i_sigma(2, ONE) - &i_sigma(2, TWO))
            * ideal_projector(ideal, ONE)
            * ideal_projector(ideal, TWO)
            * &c.correlator
    };
    diff(&c.eps, &explicit(Ideal::Plus)).max(diff(&c.eps_bar, &explicit(Ideal::Minus)))
}

fn check_inner_conjugate_symmetry(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..30 {
        let psi = sample::correlated_state(rng);
        let phi = sample::correlated_state(rng);
        worst = worst.max(cdiff(
            quantum_inner(&phi, &psi),
            quantum_inner(&psi, &phi).conj(),
        ));
    }
    worst
}

// ---------------------------------------------------------------------
// conformal layer

fn check_translation_nilpotent(rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let mut worst = 0.0f64;
    for i in 0..20 {
        let k = sample::complex_four_vector(rng, 1.0);
        let space = if i % 2 == 0 { ONE } else { TWO };
        let once = translation_generator(k, &c.eps_bar, space);
        let twice = translation_generator(k, &once, space);
        worst = worst.max(twice.max_abs_coeff());
    }
    worst
}

fn check_translation_additive(rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let a = sample::complex_four_vector(rng, 1.0);
        let b = sample::complex_four_vector(rng, 1.0);
        let two_step = translate(&translate(&c.eps_bar, a, ONE), b, ONE);
        let one_step = translate(&c.eps_bar, a + b, ONE);
        worst = worst.max(diff(&two_step, &one_step));
        let there = translate(&c.eps_bar, a, TWO);
        let back = translate(&there, -a, TWO);
        worst = worst.max(diff(&back, &c.eps_bar));
    }
    worst
}

fn check_point_explicit(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..20 {
        let k = if i % 2 == 0 {
            real(sample::four_vector(rng, 1.0))
        } else {
            sample::complex_four_vector(rng, 1.0)
        };
        let scale = rng.gen_range(0.25..2.0);
        let built = conformal_point(k, scale).state;
        worst = worst.max(diff(&built, &explicit_point(k, scale)));
    }
    worst
}

fn check_point_null_norm(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let p = conformal_point(real(sample::four_vector(rng, 1.5)), 1.0);
        worst = worst.max(quantum_inner(&p.state, &p.state).modulus());
    }
    worst
}

fn check_coordinate_roundtrip(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let k = real(sample::four_vector(rng, 1.5));
        let scale = rng.gen_range(0.25..2.0);
        let p = conformal_point(k, scale);
        let coords = extract_coordinates(&p).unwrap();
        let rebuilt = conformal_point(real(coords.four.unwrap()), coords.six.v - coords.six.w);
        worst = worst.max(diff(&rebuilt.state, &p.state));
        worst = worst.max(coords.six.null_cone_residual().abs());
    }
    worst
}

fn check_flat_kernel(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let q = sample::four_vector(rng, 1.0);
        let r = sample::four_vector(rng, 1.0);
        let inner = quantum_inner(
            &conformal_point(real(q), 1.0).state,
            &conformal_point(real(r), 1.0).state,
        );
        let want = -0.5 * minkowski_dot(q - r, q - r);
        worst = worst.max((inner.re - want).abs()).max(inner.im.abs());
    }
    worst
}

fn check_scale_equivariance(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let k = sample::complex_four_vector(rng, 1.0);
        let lambda = rng.gen_range(-3.0..3.0);
        let scaled = conformal_point(k, lambda).state;
        let base = conformal_point(k, 1.0).state.scaled(lambda);
        worst = worst.max(diff(&scaled, &base));
    }
    worst
}

fn check_point_infinity_condition(rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let k = real(sample::four_vector(rng, 1.5));
        let scale = rng.gen_range(-2.0..2.0);
        let p = conformal_point(k, scale);
        let cond = quantum_inner(&c.eps, &p.state);
        worst = worst.max(cdiff(cond, ComplexScalar::new(scale / 2.0, 0.0)));
    }
    worst
}

// ---------------------------------------------------------------------
// twistor layer

fn check_valence2_antisymmetry(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let z = Twistor::new(sample::pauli_spinor(rng), sample::pauli_spinor(rng));
        let x = Twistor::new(sample::pauli_spinor(rng), sample::pauli_spinor(rng));
        let k = sample::complex_four_vector(rng, 1.0);
        let zx = valence2(&z, &x, k);
        let xz = valence2(&x, &z, k);
        worst = worst.max((&zx.state + &xz.state).max_abs_coeff());
    }
    worst
}

fn check_origin_rays(rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let z = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let x = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let r = valence2(&z, &x, ComplexFourVector::ZERO);
        let blocks = r.ideal_projections();
        for block in &blocks[..3] {
            worst = worst.max(block.max_abs_coeff());
        }
        let frame = r.spin_frame_factor().unwrap();
        // the same factor must reappear in the finite-point condition
        worst = worst.max(cdiff(quantum_inner(&c.eps, &r.state), frame * 0.5));
    }
    worst
}

fn check_translation_covariance(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..30 {
        let z = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let x = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let observer = real(sample::four_vector(rng, 1.0));
        let at_observer = valence2(&z, &x, observer);
        let at_origin = valence2(&z, &x, ComplexFourVector::ZERO);
        let translated = translate(&translate(&at_origin.state, -observer, ONE), -observer, TWO);
        worst = worst.max(diff(&at_observer.state, &translated));
    }
    worst
}

fn check_incidence_origin(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let z = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let x = Twistor::null_through_origin(sample::pauli_spinor(rng));
        worst = worst.max(incidence_product(&z, &x, ComplexFourVector::ZERO).modulus());
    }
    worst
}

fn check_solve_origin(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let z = Twistor::null_through_origin(sample::pauli_rotor(rng));
        let x = Twistor::null_through_origin(sample::pauli_rotor(rng));
        match solve_incidence(&z, &x) {
            Ok(k) => worst = worst.max(k.r.abs_norm()).max(k.s.abs_norm()),
            Err(_) => worst = f64::INFINITY,
        }
    }
    worst
}

fn check_solve_roundtrip_real(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let k = real(sample::four_vector(rng, 1.0));
        let (z, x) = incident_pair(rng, k);
        match solve_incidence(&z, &x) {
            Ok(sol) => {
                worst = worst.max((sol.r - k.r).abs_norm()).max(sol.s.abs_norm());
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    worst
}

fn check_solve_roundtrip_complex(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let k = sample::complex_four_vector(rng, 1.0);
        let (z, x) = incident_pair(rng, k);
        match solve_incidence(&z, &x) {
            Ok(sol) => {
                worst = worst
                    .max((sol.r - k.r).abs_norm())
                    .max((sol.s - k.s).abs_norm());
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    worst
}

fn check_ideal_projection_table(rng: &mut ChaCha8Rng) -> f64 {
    let c = constants();
    let mut worst = 0.0f64;
    for _ in 0..30 {
        let z = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let x = Twistor::null_through_origin(sample::pauli_spinor(rng));
        let observer = sample::four_vector(rng, 1.0);
        let r12 = valence2(&z, &x, real(observer));
        let frame = match r12.spin_frame_factor() {
            Ok(f) => f,
            Err(_) => {
                worst = f64::INFINITY;
                continue;
            }
        };
        let factor = &Multivector::scalar(frame.re) + &i_sigma(3, ONE).scaled(frame.im);
        let tail = |space| pseudoscalar(space) * gamma(3, space);
        let expected = [
            (&c.eps.scaled(-minkowski_dot(observer, observer)) * &factor),
            (&(embed_vector(observer, ONE) * &c.eps_bar * tail(ONE)) * &factor),
            (&(embed_vector(observer, TWO) * &c.eps_bar * tail(TWO)) * &factor),
            (&c.eps_bar * &factor),
        ];
        let blocks = r12.ideal_projections();
        for (block, want) in blocks.iter().zip(&expected) {
            worst = worst.max(diff(block, want));
        }
    }
    worst
}

fn check_spin_frame_parallel(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let pi = sample::pauli_spinor(rng);
        let z = Twistor::null_through_origin(pi);
        let lambda = rng.gen_range(0.5..2.0);
        let x = Twistor::null_through_origin(pi * lambda);
        let r = valence2(&z, &x, ComplexFourVector::ZERO);
        worst = worst.max(
            r.spin_frame_factor()
                .map(|f| f.modulus())
                .unwrap_or(f64::INFINITY),
        );
    }
    worst
}

fn check_charge_reality(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for instance in 0..40 {
        let is_real = instance % 2 == 0;
        let k = if is_real {
            real(sample::four_vector(rng, 1.0))
        } else {
            sample::complex_four_vector(rng, 1.0)
        };
        let (z, x) = incident_pair(rng, k);
        let r12 = match valence2(&z, &x, ComplexFourVector::ZERO).normalized() {
            Ok(r) => r,
            Err(_) => {
                worst = f64::INFINITY;
                continue;
            }
        };
        let kg = match bargmann_wigner_decompose(&r12.state) {
            Ok(kg) => kg,
            Err(_) => {
                worst = f64::INFINITY;
                continue;
            }
        };
        if is_real {
            // uncharged: |beta| stays at solver noise level
            worst = worst.max(kg.beta.abs());
        } else if !kg.is_charged() {
            // complexified points must register as charged
            worst = f64::INFINITY;
        }
        let event = matches!(is_event(&r12), Ok(Locus::Finite { event: true, .. }));
        if event != is_real {
            worst = f64::INFINITY;
        }
    }
    worst
}

fn check_wave_function_identification(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let k = sample::complex_four_vector(rng, 1.0);
        let (z, x) = incident_pair(rng, k);
        let normalized = match valence2(&z, &x, ComplexFourVector::ZERO).normalized() {
            Ok(r) => r,
            Err(_) => {
                worst = f64::INFINITY;
                continue;
            }
        };
        let kg = match bargmann_wigner_decompose(&normalized.state) {
            Ok(kg) => kg,
            Err(_) => {
                worst = f64::INFINITY;
                continue;
            }
        };
        let a = -(minkowski_dot(k.r, k.r) - minkowski_dot(k.s, k.s));
        let b = -2.0 * minkowski_dot(k.r, k.s);
        worst = worst
            .max((kg.alpha - a).abs())
            .max((kg.beta - b).abs())
            .max((kg.theta - 1.0).abs())
            .max(kg.mu.abs())
            .max((kg.u + k.r).abs_norm())
            .max((kg.v - k.s).abs_norm());
    }
    worst
}

// ---------------------------------------------------------------------
// cosmology layer

fn check_infinity_norm_table(_rng: &mut ChaCha8Rng) -> f64 {
    let t = cosmo_twistors();
    let pins: [(&TwoValenceTwistor, &TwoValenceTwistor, f64); 10] = [
        (&t.i_m, &t.i_m, 0.0),
        (&t.i_m, &t.i_ds, 0.5),
        (&t.i_m, &t.i_ads, 0.5),
        (&t.i_m, &t.bang, 0.0),
        (&t.i_ds, &t.i_ds, 1.0),
        (&t.i_ds, &t.i_ads, 0.0),
        (&t.i_ds, &t.bang, 0.0),
        (&t.i_ads, &t.i_ads, -1.0),
        (&t.i_ads, &t.bang, 0.0),
        (&t.bang, &t.bang, 0.25),
    ];
    let mut worst = 0.0f64;
    for (a, b, want) in pins {
        worst = worst.max(cdiff(a.quantum_inner(b), ComplexScalar::new(want, 0.0)));
    }
    worst
}

fn check_finite_point_minkowski(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = sample::four_vector(rng, 1.5);
        let scale = rng.gen_range(0.25..2.0);
        let cond = finite_point_condition(Space::Minkowski, &point_twistor(r, scale));
        worst = worst.max(cdiff(cond, ComplexScalar::new(scale / 2.0, 0.0)));
    }
    worst
}

fn check_finite_point_de_sitter(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = sample::four_vector(rng, 1.5);
        let cond = finite_point_condition(Space::DeSitter, &point_twistor(r, 1.0));
        let want = 0.5 * (1.0 - minkowski_dot(r, r));
        worst = worst.max(cdiff(cond, ComplexScalar::new(want, 0.0)));
    }
    worst
}

fn check_finite_point_anti_de_sitter(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = sample::four_vector(rng, 1.5);
        let cond = finite_point_condition(Space::AntiDeSitter, &point_twistor(r, 1.0));
        let want = -0.5 * (1.0 + minkowski_dot(r, r));
        worst = worst.max(cdiff(cond, ComplexScalar::new(want, 0.0)));
    }
    worst
}

fn check_distance_minkowski(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let q = sample::four_vector(rng, 1.0);
        let r = sample::four_vector(rng, 1.0);
        let scale_q = rng.gen_range(0.25..2.0);
        let scale_r = rng.gen_range(0.25..2.0);
        let d = distance(
            Space::Minkowski,
            &point_twistor(q, scale_q),
            &point_twistor(r, scale_r),
        );
        match d {
            Ok(d) => worst = worst.max((d - minkowski_dot(q - r, q - r)).abs()),
            Err(_) => worst = f64::INFINITY,
        }
    }
    worst
}

fn curved_distance_consistency(rng: &mut ChaCha8Rng, space: Space) -> f64 {
    let mut worst = 0.0f64;
    let mut kept = 0;
    while kept < 20 {
        let q = sample::four_vector(rng, 0.35);
        let r = sample::four_vector(rng, 0.35);
        let closed = match distance_closed_form(space, q, r) {
            Ok(d) => d,
            Err(_) => continue, // outside the real branch; resample
        };
        kept += 1;
        match distance(space, &point_twistor(q, 1.0), &point_twistor(r, 1.0)) {
            Ok(d) => worst = worst.max((d - closed).abs()),
            Err(_) => worst = f64::INFINITY,
        }
    }
    worst
}

fn check_distance_de_sitter(rng: &mut ChaCha8Rng) -> f64 {
    let origin = point_twistor(FourVector::ZERO, 1.0);
    let half = point_twistor(FourVector::new(0.5, 0.0, 0.0, 0.0), 1.0);
    let pin = match distance(Space::DeSitter, &origin, &half) {
        Ok(d) => (d - 3.0f64.ln()).abs(),
        Err(_) => f64::INFINITY,
    };
    pin.max(curved_distance_consistency(rng, Space::DeSitter))
}

fn check_distance_anti_de_sitter(rng: &mut ChaCha8Rng) -> f64 {
    let origin = point_twistor(FourVector::ZERO, 1.0);
    let half = point_twistor(FourVector::new(0.5, 0.0, 0.0, 0.0), 1.0);
    let pin = match distance(Space::AntiDeSitter, &origin, &half) {
        Ok(d) => (d - 0.6f64.acos()).abs(),
        Err(_) => f64::INFINITY,
    };
    pin.max(curved_distance_consistency(rng, Space::AntiDeSitter))
}

fn check_bang_time(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = sample::four_vector(rng, 2.0);
        let got = bang_time(&point_twistor(r, 1.0));
        worst = worst.max(cdiff(got, ComplexScalar::new(-r.t / 2.0, 0.0)));
        // linear in the scale, independent of the spatial components
        let scale = rng.gen_range(0.25..2.0);
        let got = bang_time(&point_twistor(r, scale));
        worst = worst.max(cdiff(got, ComplexScalar::new(-r.t * scale / 2.0, 0.0)));
    }
    worst
}

fn check_frw_k1_relations(_rng: &mut ChaCha8Rng) -> f64 {
    let t = cosmo_twistors();
    let (i, ibar) = frw_twistors(1).unwrap();
    let mut worst = diff(&(&i.state + &ibar.state), &t.bang.state);
    worst = worst.max(cdiff(i.quantum_inner(&i), ComplexScalar::new(0.125, 0.0)));
    worst.max(cdiff(ibar.quantum_inner(&i), ComplexScalar::ZERO))
}

fn check_frw_k1_point(rng: &mut ChaCha8Rng) -> f64 {
    let (i, _) = frw_twistors(1).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = sample::four_vector(rng, 1.5);
        let want = ComplexScalar::new(-r.t / 4.0, -(1.0 - minkowski_dot(r, r)) / 8.0);
        worst = worst.max(cdiff(i.quantum_inner(&point_twistor(r, 1.0)), want));
    }
    worst
}

fn check_frw_km1_relations(_rng: &mut ChaCha8Rng) -> f64 {
    let t = cosmo_twistors();
    let (i, j) = frw_twistors(-1).unwrap();
    let worst = diff(&(&i.state + &j.state), &t.bang.state);
    worst.max(cdiff(i.quantum_inner(&j), ComplexScalar::new(0.125, 0.0)))
}

fn check_frw_km1_point(rng: &mut ChaCha8Rng) -> f64 {
    let (i, _) = frw_twistors(-1).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let r = sample::four_vector(rng, 1.5);
        let want = ComplexScalar::new((-r.t + 0.5 * (1.0 + minkowski_dot(r, r))) / 4.0, 0.0);
        worst = worst.max(cdiff(i.quantum_inner(&point_twistor(r, 1.0)), want));
    }
    worst
}

// ---------------------------------------------------------------------

fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "clifford/metric-diagonal",
            lhs: "gamma_mu^i gamma_nu^i + gamma_nu^i gamma_mu^i",
            rhs: "2 eta_mu_nu",
            tolerance: 1e-12,
            run: check_metric,
        },
        Check {
            id: "clifford/cross-space-anticommute",
            lhs: "gamma_mu^1 gamma_nu^2 + gamma_nu^2 gamma_mu^1",
            rhs: "0",
            tolerance: 1e-12,
            run: check_cross_anticommute,
        },
        Check {
            id: "clifford/associativity",
            lhs: "(a b) c",
            rhs: "a (b c)",
            tolerance: 1e-10,
            run: check_associativity,
        },
        Check {
            id: "clifford/reversion-antiautomorphism",
            lhs: "reverse(a b)",
            rhs: "reverse(b) reverse(a)",
            tolerance: 1e-12,
            run: check_reversion,
        },
        Check {
            id: "clifford/exp-rotor-closed-form",
            lhs: "exp(theta I sigma_k)",
            rhs: "cos(theta) + sin(theta) I sigma_k",
            tolerance: 1e-12,
            run: check_exp_rotor,
        },
        Check {
            id: "clifford/exp-nilpotent",
            lhs: "exp(n) with n n = 0",
            rhs: "1 + n",
            tolerance: 1e-12,
            run: check_exp_nilpotent,
        },
        Check {
            id: "sta/embed-minkowski-dot",
            lhs: "<embed(q) embed(r)>",
            rhs: "q . r",
            tolerance: 1e-12,
            run: check_embed_minkowski,
        },
        Check {
            id: "sta/weyl-complex-phase",
            lhs: "psi I sigma3",
            rhs: "weyl(omega i, -pi i)",
            tolerance: 1e-12,
            run: check_weyl_phase,
        },
        Check {
            id: "msta/correlator-idempotent",
            lhs: "E E, <E>, grades(E)",
            rhs: "E, 1/2, {0,4}",
            tolerance: 1e-12,
            run: check_correlator,
        },
        Check {
            id: "msta/complex-structure",
            lhs: "J J and E I sigma3^a",
            rhs: "-E and J",
            tolerance: 1e-12,
            run: check_complex_structure,
        },
        Check {
            id: "msta/inner-unit-norm",
            lhs: "(E,E)_s",
            rhs: "1 + 0j",
            tolerance: 1e-12,
            run: check_inner_unit_norm,
        },
        Check {
            id: "msta/singlet-condition",
            lhs: "I sigma_k^1 chi",
            rhs: "-I sigma_k^2 chi",
            tolerance: 1e-12,
            run: check_singlet_condition,
        },
        Check {
            id: "msta/singlet-norm",
            lhs: "(chi,chi)_s",
            rhs: "1 + 0j",
            tolerance: 1e-12,
            run: check_singlet_norm,
        },
        Check {
            id: "msta/singlet-rotation-invariance",
            lhs: "M^1 M^2 chi",
            rhs: "chi",
            tolerance: 1e-10,
            run: check_singlet_rotation,
        },
        Check {
            id: "msta/zeta-norm",
            lhs: "(zeta,zeta)_s",
            rhs: "1 + 0j",
            tolerance: 1e-12,
            run: check_zeta_norm,
        },
        Check {
            id: "msta/zeta-exchange",
            lhs: "M^1 zeta",
            rhs: "reverse(M)^2 zeta",
            tolerance: 1e-10,
            run: check_zeta_exchange,
        },
        Check {
            id: "msta/zeta-lorentz-invariance",
            lhs: "R^1 R^2 zeta",
            rhs: "zeta",
            tolerance: 1e-9,
            run: check_zeta_lorentz,
        },
        Check {
            id: "msta/zeta-split",
            lhs: "zeta",
            rhs: "eps + eps_bar",
            tolerance: 1e-12,
            run: check_zeta_split,
        },
        Check {
            id: "msta/massless-null-norm",
            lhs: "(eps,eps)_s and (eps_bar,eps_bar)_s",
            rhs: "0 + 0j",
            tolerance: 1e-12,
            run: check_massless_null_norm,
        },
        Check {
            id: "msta/massless-cross-norm",
            lhs: "(eps,eps_bar)_s",
            rhs: "1/2 + 0j",
            tolerance: 1e-12,
            run: check_massless_cross_norm,
        },
        Check {
            id: "msta/massless-conjugation",
            lhs: "eps",
            rhs: "eps_bar sigma1^1 sigma1^2",
            tolerance: 1e-12,
            run: check_massless_conjugation,
        },
        Check {
            id: "msta/massless-complex-action",
            lhs: "eps I sigma3 and eps_bar I sigma3",
            rhs: "I eps and -I eps_bar",
            tolerance: 1e-12,
            run: check_massless_complex_action,
        },
        Check {
            id: "msta/massless-explicit-form",
            lhs: "zeta (1 +/- sigma3)/2 in both spaces",
            rhs: "(I sigma2^1 - I sigma2^2) P P E",
            tolerance: 1e-12,
            run: check_massless_explicit,
        },
        Check {
            id: "msta/inner-conjugate-symmetry",
            lhs: "(phi,psi)_s",
            rhs: "conj (psi,phi)_s",
            tolerance: 1e-10,
            run: check_inner_conjugate_symmetry,
        },
        Check {
            id: "conformal/translation-nilpotent",
            lhs: "khat(khat(phi))",
            rhs: "0",
            tolerance: 1e-12,
            run: check_translation_nilpotent,
        },
        Check {
            id: "conformal/translation-additive",
            lhs: "T_a T_b phi",
            rhs: "T_(a+b) phi",
            tolerance: 1e-12,
            run: check_translation_additive,
        },
        Check {
            id: "conformal/point-explicit-form",
            lhs: "scale T_k^1 T_k^2 eps_bar",
            rhs: "-(k kbar) eps - k^1 eps_bar I gamma3^1 - k^2 eps_bar I gamma3^2 + eps_bar",
            tolerance: 1e-12,
            run: check_point_explicit,
        },
        Check {
            id: "conformal/point-null-norm",
            lhs: "(psi_r,psi_r)_s",
            rhs: "0 + 0j",
            tolerance: 1e-10,
            run: check_point_null_norm,
        },
        Check {
            id: "conformal/coordinate-roundtrip",
            lhs: "rebuild(extract(psi_r)) and null-cone residual",
            rhs: "psi_r and 0",
            tolerance: 1e-10,
            run: check_coordinate_roundtrip,
        },
        Check {
            id: "conformal/flat-distance-kernel",
            lhs: "(psi_q,psi_r)_s",
            rhs: "-(q-r).(q-r)/2",
            tolerance: 1e-9,
            run: check_flat_kernel,
        },
        Check {
            id: "conformal/scale-equivariance",
            lhs: "conformal_point(k, lambda)",
            rhs: "lambda conformal_point(k, 1)",
            tolerance: 1e-12,
            run: check_scale_equivariance,
        },
        Check {
            id: "conformal/infinity-condition",
            lhs: "(eps, psi_r)_s",
            rhs: "scale/2 + 0j",
            tolerance: 1e-12,
            run: check_point_infinity_condition,
        },
        Check {
            id: "twistor/valence2-antisymmetry",
            lhs: "valence2(Z,X)",
            rhs: "-valence2(X,Z)",
            tolerance: 1e-12,
            run: check_valence2_antisymmetry,
        },
        Check {
            id: "twistor/origin-rays",
            lhs: "valence2 of origin rays",
            rhs: "eps_bar (c + d j)",
            tolerance: 1e-10,
            run: check_origin_rays,
        },
        Check {
            id: "twistor/translation-covariance",
            lhs: "valence2 at observer r",
            rhs: "T_-r^1 T_-r^2 valence2 at origin",
            tolerance: 1e-9,
            run: check_translation_covariance,
        },
        Check {
            id: "twistor/incidence-origin",
            lhs: "<~X Z>_s of origin rays",
            rhs: "0 + 0j",
            tolerance: 1e-12,
            run: check_incidence_origin,
        },
        Check {
            id: "twistor/solve-origin",
            lhs: "solve_incidence(omega = 0 pair)",
            rhs: "0",
            tolerance: 1e-9,
            run: check_solve_origin,
        },
        Check {
            id: "twistor/solve-roundtrip-real",
            lhs: "solve_incidence(fields at -q)",
            rhs: "q",
            tolerance: 1e-9,
            run: check_solve_roundtrip_real,
        },
        Check {
            id: "twistor/solve-roundtrip-complex",
            lhs: "solve_incidence(fields at -k)",
            rhs: "k = r + I s",
            tolerance: 1e-9,
            run: check_solve_roundtrip_complex,
        },
        Check {
            id: "twistor/ideal-projection-table",
            lhs: "ideal projections of valence2 at observer r",
            rhs: "(-|r|^2 eps, r^1 eps_bar I gamma3^1, r^2 eps_bar I gamma3^2, eps_bar) (c + d j)",
            tolerance: 1e-9,
            run: check_ideal_projection_table,
        },
        Check {
            id: "twistor/spin-frame-parallel",
            lhs: "spin frame of parallel rays",
            rhs: "0 + 0j",
            tolerance: 1e-12,
            run: check_spin_frame_parallel,
        },
        Check {
            id: "twistor/charge-reality",
            lhs: "|beta| < tol",
            rhs: "|s_sol| < tol",
            tolerance: 1e-9,
            run: check_charge_reality,
        },
        Check {
            id: "twistor/wave-function-identification",
            lhs: "decompose(normalized valence2)",
            rhs: "(ac-bd, ad+bc, 1, 0, -r_sol, s_sol)",
            tolerance: 1e-9,
            run: check_wave_function_identification,
        },
        Check {
            id: "cosmo/infinity-norm-table",
            lhs: "pairwise (X,Y)_s over {I_M, I_dS, I_adS, B}",
            rhs: "pinned table",
            tolerance: 1e-12,
            run: check_infinity_norm_table,
        },
        Check {
            id: "cosmo/finite-point-minkowski",
            lhs: "(I_M, R_N(r))_s",
            rhs: "scale/2 + 0j",
            tolerance: 1e-12,
            run: check_finite_point_minkowski,
        },
        Check {
            id: "cosmo/finite-point-de-sitter",
            lhs: "(I_dS, R_N(r))_s",
            rhs: "(1 - |r|^2)/2 + 0j",
            tolerance: 1e-10,
            run: check_finite_point_de_sitter,
        },
        Check {
            id: "cosmo/finite-point-anti-de-sitter",
            lhs: "(I_adS, R_N(r))_s",
            rhs: "-(1 + |r|^2)/2 + 0j",
            tolerance: 1e-10,
            run: check_finite_point_anti_de_sitter,
        },
        Check {
            id: "cosmo/distance-minkowski",
            lhs: "-(Q,R)_s / (2 (I_M,Q)*_s (I_M,R)_s)",
            rhs: "(q-r).(q-r)",
            tolerance: 1e-9,
            run: check_distance_minkowski,
        },
        Check {
            id: "cosmo/distance-de-sitter",
            lhs: "acosh twistor ratio (pin: d(0, t/2) = ln 3)",
            rhs: "acosh(1 + 2(q-r).(q-r)/((1-|r|^2)(1-|q|^2)))",
            tolerance: 1e-8,
            run: check_distance_de_sitter,
        },
        Check {
            id: "cosmo/distance-anti-de-sitter",
            lhs: "acos twistor ratio (pin: d(0, t/2) = acos(3/5))",
            rhs: "acos(1 - 2(q-r).(q-r)/((1+|r|^2)(1+|q|^2)))",
            tolerance: 1e-8,
            run: check_distance_anti_de_sitter,
        },
        Check {
            id: "cosmo/bang-time",
            lhs: "(B, R_N(r))_s",
            rhs: "-t scale/2 + 0j",
            tolerance: 1e-10,
            run: check_bang_time,
        },
        Check {
            id: "cosmo/frw-k1-relations",
            lhs: "I + Ibar, (I,I)_s, (Ibar,I)_s",
            rhs: "B, 1/8, 0",
            tolerance: 1e-12,
            run: check_frw_k1_relations,
        },
        Check {
            id: "cosmo/frw-k1-point",
            lhs: "(I, R_N(r))_s",
            rhs: "(-t - (1-|r|^2)/2 j)/4",
            tolerance: 1e-10,
            run: check_frw_k1_point,
        },
        Check {
            id: "cosmo/frw-km1-relations",
            lhs: "I + J, (I,J)_s",
            rhs: "B, 1/8",
            tolerance: 1e-12,
            run: check_frw_km1_relations,
        },
        Check {
            id: "cosmo/frw-km1-point",
            lhs: "(I, R_N(r))_s",
            rhs: "(-t + (1+|r|^2)/2)/4 + 0j",
            tolerance: 1e-10,
            run: check_frw_km1_point,
        },
    ]
}
