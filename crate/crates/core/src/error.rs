use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading coefficient is not invertible in the ring")]
    NonInvertibleLeading,
    #[error("composition argument has a nonzero constant term")]
    NonZeroConstant,
    #[error("series must have zero constant term to be inverted")]
    InvertWithConstant,
    #[error("constant term is not a unit, reciprocal undefined")]
    NonUnitConstant,
    #[error("B({n},{k}) needs coordinates up to {needed}, sequence has {available}")]
    TruncationTooShort {
        n: usize,
        k: usize,
        needed: usize,
        available: usize,
    },
    #[error("unknown named series `{0}`")]
    UnknownSeries(String),
    #[error("{what} out of bounds: {detail}")]
    OutOfBounds { what: &'static str, detail: String },
    #[error("internal consistency: {0}")]
    Inconsistent(String),
    #[error("invalid weight polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
