use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The theorem and the closed forms need q = 2^f with q > 2.
    #[error("q = {0} is not supported: q must be a power of 2 greater than 2 (PSp4(2) is excluded by the q > 2 hypothesis)")]
    InvalidQ(u64),

    #[error("{order} is not an element order of PSp4({q})")]
    NotInSpectrum { q: u64, order: u64 },

    #[error("inversion of zero in GF(2^{0})")]
    ZeroInverse(u32),

    #[error("multiplicative order of zero is undefined")]
    ZeroOrder,

    #[error("extension degree {0} is outside the supported range 1..=16")]
    UnsupportedDegree(u32),

    #[error("group closure exceeded the enumeration cap of {cap} elements")]
    Capacity { cap: usize },

    #[error("spectrum member {member} does not divide the group order {order}")]
    SpectrumNotDividing { member: u64, order: BigUint },

    #[error("prime {r} is neither 2 nor a divisor of q^2+1 or q^2-1 for q = {q}")]
    PrimeOutsideCases { q: u64, r: u64 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
