use thiserror::Error;

/// Errors raised by the algebra, code and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order {0}; only 2 and 3 are supported")]
    UnsupportedField(u32),
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u8, right: u8 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("entry {value} at ({row}, {col}) is not an element of GF({q})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u8,
        q: u8,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("generator is rank deficient: row {row} depends on the rows above it")]
    RankDeficient { row: usize },
    #[error("a code needs at least one row and one column")]
    EmptyCode,
    #[error("the dual of a full-space [{n},{n}] code is zero-dimensional")]
    ZeroDimensionalDual { n: usize },
    #[error("shortening leaves a zero-dimensional code")]
    ZeroDimensional,
    #[error("coordinate {index} out of range 1..={len}")]
    CoordinateOutOfRange { index: usize, len: usize },
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("weight probe w={0} unsupported (w <= 4)")]
    ProbeTooLarge(usize),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("invalid multiplicity vector: {0}")]
    InvalidMultiplicity(&'static str),
    #[error("invalid reduction plan: {0}")]
    InvalidPlan(&'static str),
}
