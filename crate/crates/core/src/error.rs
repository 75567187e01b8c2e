use crate::arith::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cohomology index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("hypersurface degree must be at least 4, got {0}")]
    DegreeTooSmall(i64),

    #[error("s must be at least 1, got {0}")]
    InvalidS(i64),

    #[error("sigma must be at least 1, got {0}")]
    InvalidSigma(i64),

    #[error("multiplicity of O({twist}) must be positive")]
    ZeroMultiplicity { twist: i64 },

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("2*beta = {} is below the canonical twist k = {k}", 2 * beta)]
    BetaBelowHalfCanonical { beta: i64, k: i64 },

    #[error("c2 = {c2} does not exceed gamma = {gamma}; natural cohomology is not guaranteed")]
    NoNaturalCohomologyGuarantee { c2: BigInt, gamma: BigInt },

    #[error("chi(E({n})) = {chi} > 0 at the self-dual twist; natural cohomology is impossible")]
    PositiveMidpoint { n: i64, chi: BigInt },

    #[error("twist range {n_min}..={n_max} is empty")]
    EmptyRange { n_min: i64, n_max: i64 },

    #[error("interval spans more than {cap} integers")]
    TooManyPoints { cap: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("modulus {0} exceeds the supported range (< 2^32)")]
    UnsupportedModulus(u64),

    #[error("twist {n} is outside the vanishing range (< {bound})")]
    OutsideVanishingRange { n: i64, bound: i64 },

    #[error("no degree of the requested parity in 4..={limit} has a nonempty interval")]
    SearchExhausted { limit: i64 },
}
