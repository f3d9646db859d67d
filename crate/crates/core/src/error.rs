use thiserror::Error;

use crate::sequences::View;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive: {0}")]
    NonPositive(&'static str),

    #[error("expected a sequence in {expected} view, found {found}")]
    WrongView { expected: View, found: View },

    /// The Möbius sum at this index is not divisible by the index.
    #[error("not a fixed-point sequence: Möbius sum at n = {0} is not divisible by n")]
    NonIntegral(usize),

    /// The orbit count recovered at this index is negative.
    #[error("not a fixed-point sequence: orbit count at n = {0} is negative")]
    Negative(usize),

    #[error("negative term at index {index} in {view} view")]
    NegativeTerm { view: View, index: usize },

    #[error("insufficient length: need {needed} terms, have {available}")]
    InsufficientLength { needed: usize, available: usize },

    #[error("empty sequence")]
    Empty,

    #[error("unknown builtin sequence `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,

    #[error("constant term must be zero")]
    NonzeroConstantTerm,

    #[error("duplicate index {0}")]
    DuplicateIndex(u64),

    /// A coefficient that must be a nonnegative integer was not.
    #[error("coefficient {index} is not a nonnegative integer: {value}")]
    NotNonnegativeInteger { index: usize, value: String },

    #[error("b-file line {line}: {message}")]
    BFile { line: usize, message: String },
}
