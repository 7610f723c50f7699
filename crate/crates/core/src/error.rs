use std::fmt;

use thiserror::Error;

/// A row or column of a Cayley table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotSquare: expected {expected} entries in row {row}, found {found}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("NotLatin: {0} repeats a symbol")]
    NotLatin(Line),
    #[error("SymbolOutOfRange: symbol {symbol} at position {position} is not below {order}")]
    SymbolOutOfRange {
        position: usize,
        symbol: usize,
        order: usize,
    },
    #[error("NotPermutation: {0}")]
    NotPermutation(String),
    #[error("EmptyOrder: order must be positive")]
    EmptyOrder,
    #[error("SizeMismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NotNAryQuasigroup: argument {position} is not bijective")]
    NotNAryQuasigroup { position: usize },
    #[error("NotAGroup: {0}")]
    NotAGroup(String),
    #[error("NotPrime: {0}")]
    NotPrime(u64),
    #[error("SingularMatrix: determinant is zero mod {0}")]
    SingularMatrix(u64),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("NotOrthogonal: the joint map of the system is not a bijection")]
    NotOrthogonal,
    #[error("BlockLengthMismatch: expected {expected} symbols, found {found}")]
    BlockLengthMismatch { expected: usize, found: usize },
    #[error("NotCoprime: gcd({multiplier}, {modulus}) != 1")]
    NotCoprime { multiplier: u64, modulus: u64 },
    #[error("InvalidCI: the CI identity (x*y)*J(x) = y does not hold")]
    InvalidCi,
    #[error("InvalidRst: the ({r},{s},{t})-inverse identity does not hold")]
    InvalidRst { r: i64, s: i64, t: i64 },
    #[error("NotIsotopic: the secret isotopy does not map L onto L'")]
    NotIsotopic,
    #[error("NotPrimitive: period {period} is below the maximal {expected}")]
    NotPrimitive { period: u64, expected: u64 },
    #[error("ZeroState: the register state is all zero")]
    ZeroState,
    #[error("OrderMismatch: quasigroup order {quasigroup} differs from modulus {modulus}")]
    OrderMismatch { quasigroup: usize, modulus: usize },
    #[error("NotPowerOfTwo: order {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("Exhausted: no valid instance within {0} attempts")]
    Exhausted(u64),
    #[error("Inconsistent: {0}")]
    Inconsistent(String),
    #[error("NotSubset: entry ({0}, {1}, {2}) does not belong to the square")]
    NotSubset(usize, usize, usize),
    #[error("NotCritical: the entry set is not a critical set of the square")]
    NotCritical,
    #[error("Insufficient: the supplied shares admit more than one completion")]
    Insufficient,
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
    #[error("Parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
