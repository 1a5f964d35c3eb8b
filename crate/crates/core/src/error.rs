use thiserror::Error;

/// Errors raised by field, matrix, code and decoder operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported range")]
    FieldTooLarge(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(u32),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is not an element rep of GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration of {needed} items exceeds the bound {bound}")]
    EnumerationBound { needed: u128, bound: u64 },
    #[error("the zero code has no nonzero codewords")]
    ZeroCode,
    #[error("syndrome not in the coset-leader table: more than {0} errors")]
    Uncorrectable(usize),
    #[error("locality {locality} does not divide dimension {k}")]
    LocalityNotDividing { locality: usize, k: usize },
    #[error("bad block partition: {0}")]
    BadPartition(String),
    #[error("polynomial is not good for the given blocks")]
    NotGoodPolynomial,
    #[error("encoding degree {max_degree} exceeds n - 1 = {limit}")]
    DegreeOverflow { max_degree: usize, limit: usize },
    #[error("block values are not consistent with a polynomial of degree < {0}")]
    BlockInconsistent(usize),
    #[error("could not reach rank {rank} after {attempts} draws")]
    RankUnreachable { rank: usize, attempts: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
