use thiserror::Error;

use crate::search::Existence;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator set")]
    EmptyInput,
    #[error("generator 0 is not allowed")]
    InvalidGenerator,
    #[error("generators have gcd {gcd}, not a numerical semigroup")]
    NotNumerical { gcd: u64 },
    #[error("{n} is not a nonzero element of the semigroup")]
    NotMember { n: u64 },
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("need m >= e >= 2, got m = {m}, e = {e}")]
    BadDimension { m: u64, e: u64 },
    #[error("L({m},{e}) admits no search: {existence}")]
    Family {
        m: u64,
        e: u64,
        existence: Existence,
    },
    #[error("the packing map is undefined on the naturals")]
    Degenerate,
    #[error("{0} is not packed")]
    NotPacked(String),
    #[error("sieve bound {bound} is insufficient and the cap was reached")]
    Uncertified { bound: u64 },
}
