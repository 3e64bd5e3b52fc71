use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not exactly divisible by {0}")]
    NotDivisible(String),
    #[error("negative power of a non-monomial polynomial")]
    NegativePower,
    #[error("degree bound {bound} exceeded (term of degree {degree})")]
    DegreeBound { degree: i64, bound: i64 },
    #[error("q-series expansion needs a denominator supported on powers of 1-q, found {0}")]
    QSeriesDenominator(String),
    #[error("symbol sequences must use 0, 1 or . (got {0:?})")]
    InvalidSymbol(char),
    #[error("v and w must contain the same number of 1s ({v_ones} vs {w_ones})")]
    MismatchedOnes { v_ones: usize, w_ones: usize },
    #[error("symbol sequences must be non-empty")]
    EmptySequence,
    #[error("invariant set violates closure: {0} is a gap but {1} is not")]
    ClosureViolation(i64, i64),
    #[error("recursion reached uncovered front symbols at ({v}, {w})")]
    UncoveredFront { v: String, w: String },
    #[error("recursion cycle detected at ({v}, {w})")]
    RecursionCycle { v: String, w: String },
    #[error("memo table exceeded {0} entries")]
    MemoLimit(usize),
    #[error("{0} requires level >= 1")]
    LevelUnderflow(&'static str),
    #[error("Hecke index {index} out of range for level {level}")]
    HeckeIndex { index: u32, level: u32 },
    #[error("inconsistent square constraints while building a Schroeder path: {0}")]
    InconsistentSchroeder(String),
    #[error("element is not a pure symmetric function (level {0})")]
    NotSymmetric(u32),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u32, u32),
    #[error("coprime splitting needs m >= 2 (got m = {0})")]
    SplitRange(u32),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
