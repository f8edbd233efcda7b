use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {letter:?} at position {position}; words are over {{a,b}}")]
    InvalidLetter { letter: char, position: usize },

    #[error("undefined on empty word")]
    EmptyWord,

    #[error("power exponent must be at least 1")]
    ZeroExponent,

    #[error("{what} = {value} out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("non-coprime Parikh vector ({0}, {1})")]
    NonCoprime(usize, usize),

    #[error("{0}: input is not a Christoffel word")]
    NotChristoffel(&'static str),

    #[error("search bound exceeded: length {length} > {max}")]
    SearchBoundExceeded { length: usize, max: usize },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    /// A property that holds for every Christoffel word failed; this is an
    /// internal contradiction, not a user error.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
