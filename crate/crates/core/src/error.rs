//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("modulus polynomial must be monic of degree at least 1")]
    NonMonicModulus,

    #[error("polynomial degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("ring order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: u128, cap: u64 },

    #[error("product needs at least one factor")]
    EmptyProduct,

    #[error("graph has no vertex labeled {0:?}")]
    UnknownVertex(String),

    #[error("isomorphism search supports at most {cap} vertices, got {got}")]
    IsoTooLarge { cap: usize, got: usize },

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("line {line}: {msg}")]
    CatalogLine { line: usize, msg: String },

    #[error("duplicate catalog name {0:?}")]
    DuplicateName(String),

    #[error("invalid range [{lo}, {hi}]")]
    BadRange { lo: u64, hi: u64 },

    #[error("{0} is not an even integer >= 6")]
    BadGoldbachTarget(u64),

    #[error("sieve target {target} exceeds bound {bound}")]
    SieveBoundExceeded { target: u64, bound: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
