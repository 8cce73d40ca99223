use alloc::string::String;

use num_bigint::BigInt;

use crate::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid variable space: {0}")]
    InvalidVariableSpace(String),
    #[error("operands live in different variable spaces")]
    SpaceMismatch,
    #[error("expected {expected} values, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("index set must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("partition has {length} parts, at most {max} allowed")]
    PartitionTooLong { length: usize, max: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,
    #[error("polynomial is not doubly symmetric in the first {r} and last {rest} variables")]
    NotDoublySymmetric { r: usize, rest: usize },
    #[error("polynomial has degree {degree}, exceeding the bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("rank r={r} is unsupported for n={n}: need 1 <= r <= n-1")]
    UnsupportedRank { n: u32, r: u32 },
    #[error("m={m} is below the Pataki lower bound C(n-r+1,2)={lower}")]
    BelowPatakiLower { m: u32, lower: u32 },
    #[error("m={m} is above the Pataki upper bound C(n+1,2)-C(r+1,2)={upper}")]
    AbovePatakiUpper { m: u32, upper: u32 },
    #[error("sample points must be pairwise distinct (positions {0} and {1} coincide)")]
    CoincidentPoints(usize, usize),
    #[error("{method} produced {value}, which is not a positive integer")]
    NotPositiveInteger { method: &'static str, value: Rational },
    #[error("unknown method {0:?}")]
    UnknownMethod(String),
    #[error("no closed form applies to this triple")]
    ClosedFormNotApplicable,
    #[error("method disagreement: {first_method} gives {first}, {second_method} gives {second}")]
    CrossCheckMismatch {
        first_method: &'static str,
        first: BigInt,
        second_method: &'static str,
        second: BigInt,
    },
}
