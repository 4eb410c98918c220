use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer does not fit in {digits} digits of the G_(m={m}) number system")]
    Overflow { m: usize, digits: usize },

    #[error("digit {digit} at position {position} exceeds bound {bound} (m = {m})")]
    DigitBound {
        position: usize,
        digit: u64,
        bound: u64,
        m: usize,
    },

    #[error("radix parameter m must be at least 1")]
    ZeroRadix,

    #[error("operands belong to different groups: G({0},1,{1}) vs G({2},1,{3})")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("group order {order} exceeds budget {budget}")]
    BudgetExceeded { order: String, budget: u64 },

    #[error("root system requires m >= 2 (got m = {0})")]
    UnsupportedRadix(usize),

    #[error("rank {rank} outside 1..={max}")]
    RankOutOfRange { rank: String, max: String },

    #[error("flag decomposition failed at sigma_{0}")]
    DecompositionFailure(usize),

    #[error("invalid entry {entry:?}: {reason}")]
    Parse { entry: String, reason: String },

    #[error("invalid element: {0}")]
    InvalidElement(String),
}

impl Error {
    pub(crate) fn parse(entry: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            entry: entry.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
