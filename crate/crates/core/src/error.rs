//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported cap 2^20")]
    OrderTooLarge(u64),
    #[error("element {value} is not a valid encoding in GF({q})")]
    InvalidElement { value: u64, q: u64 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("incompatible field pair: GF({big}) is not a proper extension of GF({small})")]
    IncompatibleFields { big: u64, small: u64 },
    #[error("matrix dimensions mismatch: {0}")]
    Dimension(String),
    #[error("generator matrix has rank {rank}, expected full row rank {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("column {0} of the generator matrix is zero (degenerate code)")]
    ZeroColumn(usize),
    #[error("projective point must not be the zero vector")]
    ZeroVector,
    #[error("line endpoints coincide")]
    CoincidentPoints,
    #[error("operation requires {needed} steps, exceeding the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("input set is already 2-cohyperplanar")]
    AlreadyCohyperplanar,
    #[error("edge chooser returned index {index}, but only {options} points are available")]
    BadChooser { index: usize, options: usize },
    #[error("construction requires {0}")]
    Unsatisfiable(String),
    #[error("field must be an extension of GF(2) for the outer-minimality check")]
    NotCharTwo,
    #[error("{0} is not a square prime power")]
    NotSquare(u64),
    #[error("no vertex degree gives a positive spectral margin for q = {0}")]
    NoFeasibleDegree(u64),
    #[error("graph is not regular")]
    Irregular,
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("argument outside the admissible domain: {0}")]
    Domain(String),
    #[error("value table does not cover i({k}, {q})")]
    InsufficientTable { k: usize, q: u64 },
    #[error("support length {0} exceeds the 128-coordinate limit")]
    TooLong(usize),
}
