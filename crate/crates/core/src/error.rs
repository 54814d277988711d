use thiserror::Error;

/// Errors shared across the algebra and the geometry built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade {0} out of range 0..=8")]
    GradeOutOfRange(u8),

    #[error("exponential series did not converge within {0} terms")]
    ExpDivergence(usize),

    #[error("multivector mixes generators of both particle spaces")]
    MixedSpaces,

    #[error("invalid spatial curvature {0}; expected +1 or -1")]
    InvalidCurvature(i32),

    #[error("state does not have the expected coefficient shape (residual {residual:.3e})")]
    Shape { residual: f64 },

    #[error("incidence system is singular: rays are parallel or the twistors degenerate")]
    NoUniqueIncidence,

    #[error("distance argument {arg} lies outside the real branch")]
    Domain { arg: f64 },

    #[error("finite-point condition vanishes: the point lies at infinity")]
    InfinitePoint,

    #[error("complex scalar with zero modulus cannot be inverted")]
    ZeroModulus,
}
