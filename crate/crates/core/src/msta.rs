//! Two-particle structure: the correlator, the global complex structure,
//! singlet states, their massless projections, and the quantum inner
//! product.

use std::sync::OnceLock;

use crate::blade::Blade;
use crate::complex::ComplexScalar;
use crate::error::Error;
use crate::multivector::Multivector;
use crate::sta::{i_sigma, ideal_projector, pseudoscalar, Ideal, ParticleSpace};

/// The constant states of the two-particle algebra, computed once.
pub struct MstaConstants {
    /// Correlator `E = (1 - I sigma3^1 I sigma3^2)/2`.
    pub correlator: Multivector,
    /// Complex structure `J = E I sigma3^1 = E I sigma3^2`.
    pub complex_structure: Multivector,
    /// Non-relativistic singlet `chi = (I sigma2^1 - I sigma2^2) E / sqrt(2)`.
    pub chi: Multivector,
    /// Relativistic singlet `zeta = sqrt(2) chi (1 - I^1 I^2)/2`.
    pub zeta: Multivector,
    /// Massless projection `eps = zeta (1+sigma3)/2` in both spaces.
    pub eps: Multivector,
    /// Massless projection `eps_bar = zeta (1-sigma3)/2` in both spaces.
    pub eps_bar: Multivector,
    /// Normalization `1/<E>` of the inner product, derived at build time.
    pub inv_correlator_scalar: f64,
}

static CONSTANTS: OnceLock<MstaConstants> = OnceLock::new();

fn build_constants() -> MstaConstants {
    let one = Multivector::scalar(1.0);
    let is3_1 = i_sigma(3, ParticleSpace::One);
    let is3_2 = i_sigma(3, ParticleSpace::Two);
    let correlator = (&one - &(&is3_1 * &is3_2)).scaled(0.5);
    let complex_structure = &correlator * &is3_1;

    let chi = (&i_sigma(2, ParticleSpace::One) - &i_sigma(2, ParticleSpace::Two))
        .geometric_product(&correlator)
        .scaled(1.0 / 2f64.sqrt());

    let lorentz_projector =
        (&one - &(pseudoscalar(ParticleSpace::One) * pseudoscalar(ParticleSpace::Two))).scaled(0.5);
    let zeta = chi
        .scaled(2f64.sqrt())
        .geometric_product(&lorentz_projector);

    let eps = &zeta
        * &(ideal_projector(Ideal::Plus, ParticleSpace::One)
            * ideal_projector(Ideal::Plus, ParticleSpace::Two));
    let eps_bar = &zeta
        * &(ideal_projector(Ideal::Minus, ParticleSpace::One)
            * ideal_projector(Ideal::Minus, ParticleSpace::Two));

    let inv_correlator_scalar = 1.0 / correlator.scalar_part();

    MstaConstants {
        correlator,
        complex_structure,
        chi,
        zeta,
        eps,
        eps_bar,
        inv_correlator_scalar,
    }
}

pub fn constants() -> &'static MstaConstants {
    CONSTANTS.get_or_init(build_constants)
}

/// The correlator `E`; idempotent, scalar part 1/2.
pub fn correlator() -> Multivector {
    constants().correlator.clone()
}

/// The complex structure `J` acting by right multiplication; `J J = -E`.
pub fn complex_structure() -> Multivector {
    constants().complex_structure.clone()
}

/// The non-relativistic singlet `chi`.
pub fn singlet_chi() -> Multivector {
    constants().chi.clone()
}

/// The relativistic singlet `zeta = eps + eps_bar`, of unit norm.
pub fn singlet_zeta() -> Multivector {
    constants().zeta.clone()
}

/// The two null-norm massless projections `(eps, eps_bar)` of the singlet.
pub fn massless_states() -> (Multivector, Multivector) {
    let c = constants();
    (c.eps.clone(), c.eps_bar.clone())
}

/// Quantum inner product of two-particle states.
///
/// The scalar and `J` parts of `reverse(psi) * phi`, normalized by `1/<E>`
/// so the correlator has unit norm; the imaginary component rides on
/// `I sigma3^1`.
pub fn quantum_inner(psi: &Multivector, phi: &Multivector) -> ComplexScalar {
    let c = constants();
    let prod = psi.reverse().geometric_product(phi);
    let re = c.inv_correlator_scalar * prod.scalar_part();
    let im = -c.inv_correlator_scalar * prod.geometric_product(&c.complex_structure).scalar_part();
    ComplexScalar::new(re, im)
}

/// Re-express a single-space multivector on the generators of `space`.
///
/// The input must use the generators of exactly one particle space (or be a
/// scalar); masks shift by four bit positions, which preserves the
/// canonical generator order, so no signs arise.
pub fn lift(m: &Multivector, space: ParticleSpace) -> Result<Multivector, Error> {
    let mut uses_one = false;
    let mut uses_two = false;
    for (blade, _) in m.terms() {
        if blade.0 & 0x0f != 0 {
            uses_one = true;
        }
        if blade.0 & 0xf0 != 0 {
            uses_two = true;
        }
        if blade.0 & 0x0f != 0 && blade.0 & 0xf0 != 0 {
            return Err(Error::MixedSpaces);
        }
    }
    if uses_one && uses_two {
        return Err(Error::MixedSpaces);
    }
    let source = if uses_two {
        ParticleSpace::Two
    } else {
        ParticleSpace::One
    };
    if source == space || (!uses_one && !uses_two) {
        return Ok(m.clone());
    }
    let mut out = Multivector::zero();
    for (blade, coeff) in m.terms() {
        let mask = match space {
            ParticleSpace::Two => blade.0 << 4,
            ParticleSpace::One => blade.0 >> 4,
        };
        out = &out + &Multivector::term(Blade(mask), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sta::{gamma, sigma};

    const EXACT: f64 = 1e-12;

    #[test]
    fn correlator_is_idempotent() {
        let e = correlator();
        assert!(e.geometric_product(&e).max_abs_diff(&e) < EXACT);
        assert!((e.scalar_part() - 0.5).abs() < EXACT);
        // grade content {0, 4} only
        let graded = &e.grade_part(0) + &e.grade_part(4);
        assert!(e.max_abs_diff(&graded) < EXACT);
    }

    #[test]
    fn complex_structure_properties() {
        let e = correlator();
        let j = complex_structure();
        assert!((&j * &j).max_abs_diff(&-&e) < EXACT);
        for space in [ParticleSpace::One, ParticleSpace::Two] {
            let action = &e * &i_sigma(3, space);
            assert!(action.max_abs_diff(&j) < EXACT, "{space:?}");
        }
    }

    #[test]
    fn inner_product_examples() {
        let e = correlator();
        let z = singlet_zeta();
        let (eps, eps_bar) = massless_states();
        assert!(quantum_inner(&e, &e).max_abs_diff(ComplexScalar::ONE) < EXACT);
        assert!(quantum_inner(&z, &z).max_abs_diff(ComplexScalar::ONE) < EXACT);
        assert!(quantum_inner(&eps, &eps).max_abs_diff(ComplexScalar::ZERO) < EXACT);
        assert!(quantum_inner(&eps_bar, &eps_bar).max_abs_diff(ComplexScalar::ZERO) < EXACT);
        assert!(quantum_inner(&eps, &eps_bar).max_abs_diff(ComplexScalar::new(0.5, 0.0)) < EXACT);
    }

    #[test]
    fn chi_singlet_condition() {
        let chi = singlet_chi();
        for k in 1..=3u8 {
            let lhs = i_sigma(k, ParticleSpace::One) * &chi;
            let rhs = -(i_sigma(k, ParticleSpace::Two) * &chi);
            assert!(lhs.max_abs_diff(&rhs) < EXACT, "k={k}");
        }
        assert!(quantum_inner(&chi, &chi).max_abs_diff(ComplexScalar::ONE) < EXACT);
        let e = correlator();
        assert!((&chi * &e).max_abs_diff(&chi) < EXACT);
    }

    #[test]
    fn zeta_decomposes_into_massless_states() {
        let z = singlet_zeta();
        let (eps, eps_bar) = massless_states();
        assert_eq!(z, &eps + &eps_bar);
        // explicit ideal forms
        let explicit = |ideal| {
            (&i_sigma(2, ParticleSpace::One) - &i_sigma(2, ParticleSpace::Two))
                * ideal_projector(ideal, ParticleSpace::One)
                * ideal_projector(ideal, ParticleSpace::Two)
                * correlator()
        };
        assert!(eps.max_abs_diff(&explicit(Ideal::Plus)) < EXACT);
        assert!(eps_bar.max_abs_diff(&explicit(Ideal::Minus)) < EXACT);
    }

    #[test]
    fn massless_state_relations() {
        let (eps, eps_bar) = massless_states();
        let conj = &eps_bar * &(sigma(1, ParticleSpace::One) * sigma(1, ParticleSpace::Two));
        assert!(eps.max_abs_diff(&conj) < EXACT);
        let lhs = &eps * &i_sigma(3, ParticleSpace::One);
        let rhs = pseudoscalar(ParticleSpace::One) * &eps;
        assert!(lhs.max_abs_diff(&rhs) < EXACT);
        let lhs = &eps_bar * &i_sigma(3, ParticleSpace::One);
        let rhs = -(pseudoscalar(ParticleSpace::One) * &eps_bar);
        assert!(lhs.max_abs_diff(&rhs) < EXACT);
    }

    #[test]
    fn lift_examples() {
        let g0 = gamma(0, ParticleSpace::One);
        assert_eq!(
            lift(&g0, ParticleSpace::Two).unwrap(),
            gamma(0, ParticleSpace::Two)
        );
        let is3 = i_sigma(3, ParticleSpace::One);
        let lifted = lift(&is3, ParticleSpace::One).unwrap();
        // I sigma3 = gamma2 gamma1 = -(gamma1 gamma2)
        assert_eq!(lifted, Multivector::term(Blade(0b0110), -1.0));
        assert_eq!(
            lift(&Multivector::scalar(2.0), ParticleSpace::Two).unwrap(),
            Multivector::scalar(2.0)
        );
        // space 2 -> space 1
        let is3_2 = i_sigma(3, ParticleSpace::Two);
        assert_eq!(lift(&is3_2, ParticleSpace::One).unwrap(), is3);
    }

    #[test]
    fn lift_rejects_mixed_spaces() {
        let mixed = gamma(0, ParticleSpace::One) * gamma(0, ParticleSpace::Two);
        assert_eq!(lift(&mixed, ParticleSpace::One), Err(Error::MixedSpaces));
        let sum = &gamma(0, ParticleSpace::One) + &gamma(0, ParticleSpace::Two);
        assert_eq!(lift(&sum, ParticleSpace::Two), Err(Error::MixedSpaces));
    }

    #[test]
    fn lift_is_a_homomorphism() {
        let a = &gamma(0, ParticleSpace::One) + &i_sigma(2, ParticleSpace::One).scaled(0.5);
        let b = &gamma(3, ParticleSpace::One).scaled(-1.25) + &Multivector::scalar(0.5);
        let prod = lift(&a.geometric_product(&b), ParticleSpace::Two).unwrap();
        let lifted = lift(&a, ParticleSpace::Two)
            .unwrap()
            .geometric_product(&lift(&b, ParticleSpace::Two).unwrap());
        assert!(prod.max_abs_diff(&lifted) < EXACT);
    }
}
