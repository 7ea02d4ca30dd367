use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclic factor {0}: factors must be at least 2")]
    InvalidFactor(String),
    #[error("modulus {value} exceeds the {limit} supported by this scalar type")]
    Overflow { value: String, limit: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("submodules belong to different modules")]
    ParentMismatch,
    #[error("submodule is not contained in {0}")]
    NotContained(&'static str),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("prime set is not a subset of the attached primes")]
    NotSubset,
    #[error("resource cap exceeded: {what} needs at least {needed}, limit is {limit}")]
    ResourceCap {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("the zero module is outside the theorem corpus")]
    ZeroModule,
    #[error("corpus bound must be at least 2, got {0}")]
    CorpusBound(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
