//! Infinity twistors, finite-point conditions, distance functions for
//! Minkowski, de Sitter and anti-de Sitter spaces, the bang twistor, and
//! the k = +/-1 constant-curvature twistor pairs.
//!
//! Point coordinates enter these formulas through the null-ray normal
//! form: the 2-valence twistor of two null rays meeting at the origin as
//! seen by an observer at `r`, which is the conformal state of position
//! `-r`. All closed-form conditions below ((B,R) = -t/2 and friends) are
//! stated for that normal form.

use std::str::FromStr;
use std::sync::OnceLock;

use crate::complex::ComplexScalar;
use crate::conformal::conformal_point;
use crate::error::Error;
use crate::msta::{complex_structure, constants};
use crate::sta::{
    gamma, minkowski_dot, pseudoscalar, ComplexFourVector, FourVector, ParticleSpace,
};
use crate::twistor::TwoValenceTwistor;

/// Threshold under which a finite-point condition counts as vanished.
const INFINITE_TOL: f64 = 1e-12;

/// The maximally symmetric space a distance is measured in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    Minkowski,
    DeSitter,
    AntiDeSitter,
}

impl FromStr for Space {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "minkowski" | "m" => Ok(Space::Minkowski),
            "ds" | "desitter" | "de-sitter" => Ok(Space::DeSitter),
            "ads" | "antidesitter" | "anti-de-sitter" => Ok(Space::AntiDeSitter),
            other => Err(format!("unknown space `{other}`")),
        }
    }
}

/// All constant 2-valence twistors of the cosmological constructions.
pub struct CosmoTwistors {
    /// Minkowski infinity twistor `I_M = eps`.
    pub i_m: TwoValenceTwistor,
    /// de Sitter infinity twistor `I_dS = eps + eps_bar`.
    pub i_ds: TwoValenceTwistor,
    /// anti-de Sitter infinity twistor `I_adS = eps_bar - eps`.
    pub i_ads: TwoValenceTwistor,
    /// Bang twistor `B = -(gamma0^1 eps I gamma3^1 + gamma0^2 eps I gamma3^2)/2`.
    pub bang: TwoValenceTwistor,
    /// k = +1 pair: `I = B/2 + (eps+eps_bar) J / 4` and its conjugate.
    pub i_k1: TwoValenceTwistor,
    pub ibar_k1: TwoValenceTwistor,
    /// k = -1 pair: `I = B/2 - (eps_bar-eps)/4` and `J = B/2 + (eps_bar-eps)/4`.
    pub i_km1: TwoValenceTwistor,
    pub j_km1: TwoValenceTwistor,
}

static TWISTORS: OnceLock<CosmoTwistors> = OnceLock::new();

fn build_twistors() -> CosmoTwistors {
    let c = constants();
    let eps = &c.eps;
    let eps_bar = &c.eps_bar;
    let bang_state = {
        let leg =
            |space: ParticleSpace| gamma(0, space) * eps * pseudoscalar(space) * gamma(3, space);
        -(&leg(ParticleSpace::One) + &leg(ParticleSpace::Two)).scaled(0.5)
    };
    let i_ds_state = eps + eps_bar;
    let i_ads_state = eps_bar - eps;
    let j = complex_structure();

    let i_k1_state = &bang_state.scaled(0.5) + &(&i_ds_state * &j).scaled(0.25);
    let ibar_k1_state = &bang_state.scaled(0.5) - &(&i_ds_state * &j).scaled(0.25);
    let i_km1_state = &bang_state.scaled(0.5) - &i_ads_state.scaled(0.25);
    let j_km1_state = &bang_state.scaled(0.5) + &i_ads_state.scaled(0.25);

    CosmoTwistors {
        i_m: TwoValenceTwistor::from_state(eps.clone()),
        i_ds: TwoValenceTwistor::from_state(i_ds_state),
        i_ads: TwoValenceTwistor::from_state(i_ads_state),
        bang: TwoValenceTwistor::from_state(bang_state),
        i_k1: TwoValenceTwistor::from_state(i_k1_state),
        ibar_k1: TwoValenceTwistor::from_state(ibar_k1_state),
        i_km1: TwoValenceTwistor::from_state(i_km1_state),
        j_km1: TwoValenceTwistor::from_state(j_km1_state),
    }
}

pub fn cosmo_twistors() -> &'static CosmoTwistors {
    TWISTORS.get_or_init(build_twistors)
}

/// The infinity twistor that defines the metric structure of `space`.
pub fn infinity_twistor(space: Space) -> &'static TwoValenceTwistor {
    let t = cosmo_twistors();
    match space {
        Space::Minkowski => &t.i_m,
        Space::DeSitter => &t.i_ds,
        Space::AntiDeSitter => &t.i_ads,
    }
}

/// The null-ray normal form of the point with coordinates `r`.
pub fn point_twistor(r: FourVector, scale: f64) -> TwoValenceTwistor {
    TwoValenceTwistor::from_state(conformal_point(ComplexFourVector::real(-r), scale).state)
}

/// Inner product with the infinity twistor; nonzero exactly when `r` is a
/// finite point of the space.
pub fn finite_point_condition(space: Space, r: &TwoValenceTwistor) -> ComplexScalar {
    infinity_twistor(space).quantum_inner(r)
}

/// The `(k = +1 | k = -1)` constant-curvature twistor pair; the bang
/// twistor is the sum of the pair for both signs.
pub fn frw_twistors(k: i32) -> Result<(TwoValenceTwistor, TwoValenceTwistor), Error> {
    let t = cosmo_twistors();
    match k {
        1 => Ok((t.i_k1.clone(), t.ibar_k1.clone())),
        -1 => Ok((t.i_km1.clone(), t.j_km1.clone())),
        other => Err(Error::InvalidCurvature(other)),
    }
}

/// All pairwise inner products among the labelled constants
/// `{I_M, I_dS, I_adS, B}`.
pub fn infinity_norms() -> Vec<(&'static str, &'static str, ComplexScalar)> {
    let t = cosmo_twistors();
    let named: [(&'static str, &TwoValenceTwistor); 4] = [
        ("I_M", &t.i_m),
        ("I_dS", &t.i_ds),
        ("I_adS", &t.i_ads),
        ("B", &t.bang),
    ];
    let mut out = Vec::new();
    for i in 0..named.len() {
        for j in i..named.len() {
            out.push((named[i].0, named[j].0, named[i].1.quantum_inner(named[j].1)));
        }
    }
    out
}

/// Cosmic-time reading of a point state: `(B, R)_s`, which equals `-t/2`
/// for a spin-framed point at coordinates `r`. It vanishes on the big-bang
/// surface.
pub fn bang_time(r: &TwoValenceTwistor) -> ComplexScalar {
    cosmo_twistors().bang.quantum_inner(r)
}

fn condition_or_infinite(space: Space, r: &TwoValenceTwistor) -> Result<ComplexScalar, Error> {
    let cond = finite_point_condition(space, r);
    if cond.modulus() <= INFINITE_TOL {
        return Err(Error::InfinitePoint);
    }
    Ok(cond)
}

/// Distance between two point states through the twistor-ratio formulas.
///
/// Minkowski returns the squared interval; de Sitter and anti-de Sitter
/// return the geodesic distance of their unit-curvature models, rejecting
/// arguments outside the real branch with [`Error::Domain`].
pub fn distance(space: Space, q: &TwoValenceTwistor, r: &TwoValenceTwistor) -> Result<f64, Error> {
    let cond_q = condition_or_infinite(space, q)?.conj();
    let cond_r = condition_or_infinite(space, r)?;
    let inner = q.quantum_inner(r);
    match space {
        Space::Minkowski => {
            let ratio = -inner * ((cond_q * cond_r) * 2.0).inverse()?;
            Ok(ratio.re)
        }
        Space::DeSitter => {
            let self_norm = finite_point_condition(Space::DeSitter, infinity_twistor(space));
            let arg = (ComplexScalar::ONE - inner * self_norm * (cond_q * cond_r).inverse()?).re;
            if arg < 1.0 {
                return Err(Error::Domain { arg });
            }
            Ok(arg.acosh())
        }
        Space::AntiDeSitter => {
            let self_norm = finite_point_condition(Space::AntiDeSitter, infinity_twistor(space));
            let arg = (ComplexScalar::ONE - inner * self_norm * (cond_q * cond_r).inverse()?).re;
            if arg.abs() > 1.0 {
                return Err(Error::Domain { arg });
            }
            Ok(arg.acos())
        }
    }
}

/// The closed coordinate forms of [`distance`] for spin-framed points.
pub fn distance_closed_form(space: Space, q: FourVector, r: FourVector) -> Result<f64, Error> {
    let sep = minkowski_dot(q - r, q - r);
    match space {
        Space::Minkowski => Ok(sep),
        Space::DeSitter => {
            let denom = (1.0 - minkowski_dot(r, r)) * (1.0 - minkowski_dot(q, q));
            if denom == 0.0 {
                return Err(Error::InfinitePoint);
            }
            let arg = 1.0 + 2.0 * sep / denom;
            if arg < 1.0 {
                return Err(Error::Domain { arg });
            }
            Ok(arg.acosh())
        }
        Space::AntiDeSitter => {
            let denom = (1.0 + minkowski_dot(r, r)) * (1.0 + minkowski_dot(q, q));
            if denom == 0.0 {
                return Err(Error::InfinitePoint);
            }
            let arg = 1.0 - 2.0 * sep / denom;
            if arg.abs() > 1.0 {
                return Err(Error::Domain { arg });
            }
            Ok(arg.acos())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXACT: f64 = 1e-12;

    fn expect(value: ComplexScalar, re: f64, im: f64, tol: f64, what: &str) {
        assert!(
            value.max_abs_diff(ComplexScalar::new(re, im)) < tol,
            "{what}: got {value}, want {re} + {im}j"
        );
    }

    #[test]
    fn constant_inner_product_table() {
        let t = cosmo_twistors();
        expect(t.i_m.quantum_inner(&t.i_m), 0.0, 0.0, EXACT, "(I_M,I_M)");
        expect(
            t.i_ds.quantum_inner(&t.i_ds),
            1.0,
            0.0,
            EXACT,
            "(I_dS,I_dS)",
        );
        expect(
            t.i_ads.quantum_inner(&t.i_ads),
            -1.0,
            0.0,
            EXACT,
            "(I_adS,I_adS)",
        );
        expect(t.i_m.quantum_inner(&t.bang), 0.0, 0.0, EXACT, "(I_M,B)");
        expect(t.bang.quantum_inner(&t.bang), 0.25, 0.0, EXACT, "(B,B)");
        expect(t.i_m.quantum_inner(&t.i_ds), 0.5, 0.0, EXACT, "(I_M,I_dS)");
        expect(
            t.i_m.quantum_inner(&t.i_ads),
            0.5,
            0.0,
            EXACT,
            "(I_M,I_adS)",
        );
        expect(
            t.i_ds.quantum_inner(&t.i_ads),
            0.0,
            0.0,
            EXACT,
            "(I_dS,I_adS)",
        );
        expect(t.i_ds.quantum_inner(&t.bang), 0.0, 0.0, EXACT, "(I_dS,B)");
        expect(t.i_ads.quantum_inner(&t.bang), 0.0, 0.0, EXACT, "(I_adS,B)");
        assert_eq!(infinity_norms().len(), 10);
    }

    #[test]
    fn finite_point_conditions() {
        let origin = point_twistor(FourVector::ZERO, 1.0);
        expect(
            finite_point_condition(Space::Minkowski, &origin),
            0.5,
            0.0,
            EXACT,
            "minkowski origin",
        );
        let spacelike = point_twistor(FourVector::new(0.0, 1.0, 0.0, 0.0), 1.0);
        expect(
            finite_point_condition(Space::DeSitter, &spacelike),
            1.0,
            0.0,
            EXACT,
            "de sitter |r|^2 = -1",
        );
        expect(
            finite_point_condition(Space::AntiDeSitter, &origin),
            -0.5,
            0.0,
            EXACT,
            "anti-de sitter origin",
        );
    }

    #[test]
    fn bang_time_examples() {
        expect(
            bang_time(&point_twistor(FourVector::ZERO, 1.0)),
            0.0,
            0.0,
            EXACT,
            "origin",
        );
        expect(
            bang_time(&point_twistor(FourVector::new(2.0, 0.0, 0.0, 0.0), 1.0)),
            -1.0,
            0.0,
            EXACT,
            "t = 2",
        );
        expect(
            bang_time(&point_twistor(FourVector::new(1.0, 3.0, -2.0, 5.0), 1.0)),
            -0.5,
            0.0,
            EXACT,
            "depends only on t",
        );
    }

    #[test]
    fn frw_pairs_sum_to_the_bang_twistor() {
        let t = cosmo_twistors();
        for k in [1, -1] {
            let (a, b) = frw_twistors(k).unwrap();
            let sum = &a.state + &b.state;
            assert!(sum.max_abs_diff(&t.bang.state) < EXACT, "k={k}");
        }
        let (i1, ibar1) = frw_twistors(1).unwrap();
        expect(i1.quantum_inner(&i1), 0.125, 0.0, EXACT, "(I,I) k=1");
        expect(ibar1.quantum_inner(&i1), 0.0, 0.0, EXACT, "(Ibar,I) k=1");
        let (im1, jm1) = frw_twistors(-1).unwrap();
        expect(im1.quantum_inner(&jm1), 0.125, 0.0, EXACT, "(I,J) k=-1");
        assert_eq!(frw_twistors(2), Err(Error::InvalidCurvature(2)));
    }

    #[test]
    fn frw_point_formulas() {
        let r = FourVector::new(0.7, 0.3, -0.2, 0.4);
        let p = point_twistor(r, 1.0);
        let r2 = minkowski_dot(r, r);
        let (i1, _) = frw_twistors(1).unwrap();
        expect(
            i1.quantum_inner(&p),
            -r.t / 4.0,
            -(1.0 - r2) / 8.0,
            1e-10,
            "k=1 point formula",
        );
        let (im1, _) = frw_twistors(-1).unwrap();
        expect(
            im1.quantum_inner(&p),
            (-r.t + 0.5 * (1.0 + r2)) / 4.0,
            0.0,
            1e-10,
            "k=-1 point formula",
        );
        // the k=-1 reading vanishes at t=1 on the unit hyperboloid
        let unit = point_twistor(FourVector::new(1.0, 0.0, 0.0, 0.0), 1.0);
        expect(im1.quantum_inner(&unit), 0.0, 0.0, 1e-10, "k=-1 zero");
    }

    #[test]
    fn minkowski_distance_is_the_squared_interval() {
        let q = FourVector::new(0.0, 0.0, 0.0, 0.0);
        let r = FourVector::new(0.0, 1.0, 0.0, 0.0);
        let pq = point_twistor(q, 1.0);
        let pr = point_twistor(r, 1.0);
        // normalized points: (Q,R)_s.re = +1/2 here, distance = -1
        assert!((pq.quantum_inner(&pr).re - 0.5).abs() < EXACT);
        let d = distance(Space::Minkowski, &pq, &pr).unwrap();
        assert!((d - (-1.0)).abs() < 1e-12);
        assert_eq!(
            distance_closed_form(Space::Minkowski, q, r).unwrap(),
            minkowski_dot(q - r, q - r)
        );
        // scale covariance of the general ratio
        let pq = point_twistor(q, 1.7);
        let pr = point_twistor(r, -0.6);
        let d = distance(Space::Minkowski, &pq, &pr).unwrap();
        assert!((d - (-1.0)).abs() < 1e-12);
    }

    #[test]
    fn de_sitter_distance_example() {
        let q = FourVector::ZERO;
        let r = FourVector::new(0.5, 0.0, 0.0, 0.0);
        let d = distance(
            Space::DeSitter,
            &point_twistor(q, 1.0),
            &point_twistor(r, 1.0),
        )
        .unwrap();
        assert!((d - 3.0f64.ln()).abs() < 1e-12, "got {d}");
        let closed = distance_closed_form(Space::DeSitter, q, r).unwrap();
        assert!((d - closed).abs() < 1e-12);
    }

    #[test]
    fn anti_de_sitter_distance_example() {
        let q = FourVector::ZERO;
        let r = FourVector::new(0.5, 0.0, 0.0, 0.0);
        let d = distance(
            Space::AntiDeSitter,
            &point_twistor(q, 1.0),
            &point_twistor(r, 1.0),
        )
        .unwrap();
        assert!((d - 0.6f64.acos()).abs() < 1e-12, "got {d}");
        let closed = distance_closed_form(Space::AntiDeSitter, q, r).unwrap();
        assert!((d - closed).abs() < 1e-12);
    }

    #[test]
    fn spacelike_de_sitter_pairs_leave_the_real_branch() {
        let q = FourVector::ZERO;
        let r = FourVector::new(0.0, 1.0, 0.0, 0.0);
        let err = distance(
            Space::DeSitter,
            &point_twistor(q, 1.0),
            &point_twistor(r, 1.0),
        )
        .unwrap_err();
        match err {
            Error::Domain { arg } => assert!(arg < 1.0),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn infinite_points_are_rejected() {
        let t = cosmo_twistors();
        // (I_M, I_M)_s = 0, so I_M is not a finite Minkowski point.
        let err = distance(
            Space::Minkowski,
            &t.i_m,
            &point_twistor(FourVector::ZERO, 1.0),
        );
        assert_eq!(err, Err(Error::InfinitePoint));
    }

    #[test]
    fn space_parsing() {
        assert_eq!("minkowski".parse::<Space>(), Ok(Space::Minkowski));
        assert_eq!("ds".parse::<Space>(), Ok(Space::DeSitter));
        assert_eq!("ads".parse::<Space>(), Ok(Space::AntiDeSitter));
        assert!("euclid".parse::<Space>().is_err());
    }
}
