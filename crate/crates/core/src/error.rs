use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} has {parts} nonzero parts, more than the rank bound {max}")]
    TooManyParts {
        partition: String,
        parts: usize,
        max: usize,
    },

    #[error("gaussian polynomial [{a} choose {b}] requires b <= a")]
    GaussianRange { a: usize, b: usize },

    #[error("plethysm index w = {w} outside 0..={max}")]
    PlethysmRange { w: usize, max: usize },

    #[error("unsupported root system {0}: {1}")]
    UnsupportedType(String, &'static str),

    #[error("weight {weight} is not dominant")]
    NotDominant { weight: String },

    #[error("weight {weight} has {got} coordinates, expected {expected}")]
    RankMismatch {
        weight: String,
        got: usize,
        expected: usize,
    },

    #[error("size cap exceeded while computing {what}: more than {cap} weight entries (raise --size-cap or INVLINE_SIZE_CAP)")]
    SizeCap { what: &'static str, cap: usize },

    #[error("ambient groups differ: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("unsupported functor {0}: degree must be between 1 and 4")]
    UnsupportedFunctor(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    InvalidArgument(String),
}
