use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("symbol {symbol} out of range for alphabet size {d}")]
    SymbolOutOfRange { symbol: usize, d: usize },
    #[error("group order exceeds limit of {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("state space {d}^{n} exceeds limit of {limit}")]
    StateSpaceTooLarge { n: usize, d: usize, limit: u64 },
    #[error("permutation is not an element of the group")]
    NotInGroup,
    #[error("sum {numerator} is not divisible by group order {order}")]
    InexactDivision { numerator: String, order: usize },
    #[error("group is not totally orthogonal (Frobenius-Schur indicators {indicators:?})")]
    NotTotallyOrthogonal { indicators: Vec<i32> },
    #[error("character table eigen-splitting failed after {attempts} attempts")]
    NumericalDegeneracy { attempts: usize },
    #[error("{what} residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual {
        what: &'static str,
        residual: f64,
        tolerance: f64,
    },
    #[error("operation requires a cyclic group")]
    NotCyclic,
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("ambiguous decode: best overlaps {best} and {second} are within tolerance")]
    AmbiguousDecode { best: f64, second: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// True for errors raised by a configured size bound rather than bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::GroupTooLarge { .. } | Error::StateSpaceTooLarge { .. }
        )
    }
}
