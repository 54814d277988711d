//! Sparse Clifford-algebra kernel for the two-particle spacetime algebra
//! Cl(2,6), together with the structures built on top of it: maximally
//! entangled singlet states, the two-particle conformal embedding of
//! (complexified) Minkowski points, twistor incidence, and the infinity /
//! bang twistors with their distance functions for Minkowski, de Sitter
//! and anti-de Sitter spaces.
//!
//! The eight generators split into two anticommuting copies of the
//! spacetime algebra: generators 0-3 carry particle space 1, generators
//! 4-7 particle space 2, each with metric signature (+,-,-,-).
//!
//! Every algebraic identity the library relies on can be checked at run
//! time with [`verify::run_suite`], which the `msta verify` subcommand
//! wraps.

pub mod blade;
pub mod complex;
pub mod conformal;
pub mod cosmo;
mod error;
pub mod linear;
pub mod msta;
pub mod multivector;
pub mod sample;
pub mod sta;
pub mod text;
pub mod twistor;
pub mod verify;

pub use blade::Blade;
pub use complex::ComplexScalar;
pub use error::Error;
pub use multivector::Multivector;
pub use sta::{ComplexFourVector, FourVector, ParticleSpace, PauliSpinor};
