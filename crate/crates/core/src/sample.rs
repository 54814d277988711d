//! Seeded samplers for the randomized identity checks.
//!
//! Every sampler draws from a caller-provided RNG; the harness derives one
//! deterministic stream per check so results do not depend on scheduling.

use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

use crate::blade::Blade;
use crate::msta::constants;
use crate::multivector::Multivector;
use crate::sta::{ComplexFourVector, FourVector, ParticleSpace, PauliSpinor};

/// FNV-1a hash of a label; stable across platforms and toolchains.
pub fn fnv1a(text: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// RNG for one named check under the given suite seed.
pub fn seeded_rng(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(label))
}

pub fn four_vector(rng: &mut impl Rng, radius: f64) -> FourVector {
    FourVector::new(
        rng.gen_range(-radius..radius),
        rng.gen_range(-radius..radius),
        rng.gen_range(-radius..radius),
        rng.gen_range(-radius..radius),
    )
}

pub fn complex_four_vector(rng: &mut impl Rng, radius: f64) -> ComplexFourVector {
    ComplexFourVector::new(four_vector(rng, radius), four_vector(rng, radius))
}

pub fn pauli_spinor(rng: &mut impl Rng) -> PauliSpinor {
    PauliSpinor::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

/// A Pauli-even rotor: unit-normalized quaternion.
pub fn pauli_rotor(rng: &mut impl Rng) -> PauliSpinor {
    loop {
        let p = pauli_spinor(rng);
        let norm = p.components().iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return p * (1.0 / norm);
        }
    }
}

/// Even-grade masks of one particle-space nibble, scalar through
/// pseudoscalar.
const EVEN_NIBBLE: [u8; 8] = [
    0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111,
];

/// Random element of the even subalgebra of one particle space, with
/// coefficients in [-1, 1].
pub fn even_element(rng: &mut impl Rng, space: ParticleSpace) -> Multivector {
    let mut out = Multivector::zero();
    for mask in EVEN_NIBBLE {
        out = &out + &Multivector::term(Blade(mask << space.shift()), rng.gen_range(-1.0..1.0));
    }
    out
}

/// Random rotor of one particle space: the exponential of half a random
/// bivector, renormalized through the scalar part of `R reverse(R)`.
pub fn rotor(rng: &mut impl Rng, space: ParticleSpace) -> Multivector {
    loop {
        let mut bivector = Multivector::zero();
        for mask in EVEN_NIBBLE {
            if Blade(mask).grade() == 2 {
                bivector = &bivector
                    + &Multivector::term(Blade(mask << space.shift()), rng.gen_range(-1.0..1.0));
            }
        }
        let r = bivector
            .scaled(0.5)
            .exp_series(1e-15)
            .expect("bounded bivector exponential converges");
        let norm = r.geometric_product(&r.reverse()).scalar_part();
        if norm > 1e-6 {
            return r.scaled(1.0 / norm.sqrt());
        }
    }
}

/// Sparse random multivector over the full algebra.
pub fn sparse_multivector(rng: &mut impl Rng, terms: usize) -> Multivector {
    let mut out = Multivector::zero();
    for _ in 0..terms {
        out = &out + &Multivector::term(Blade(rng.gen::<u8>()), rng.gen_range(-1.0..1.0));
    }
    out
}

/// Random even two-particle state right-stable under the correlator.
pub fn correlated_state(rng: &mut impl Rng) -> Multivector {
    let mut raw = Multivector::zero();
    let mut placed = 0;
    while placed < 12 {
        let mask = rng.gen::<u8>();
        if mask.count_ones() % 2 == 0 {
            raw = &raw + &Multivector::term(Blade(mask), rng.gen_range(-1.0..1.0));
            placed += 1;
        }
    }
    raw.geometric_product(&constants().correlator)
}
