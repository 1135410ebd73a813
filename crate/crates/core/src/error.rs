use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("series with zero constant term is not invertible")]
    NotInvertible,

    #[error("inner series of a composition must have zero constant term")]
    CompositionDomain,

    #[error("reversion needs a series of valuation exactly 1 (w0 = 0, w1 != 0)")]
    ReversionDomain,

    #[error("index {index} is beyond the known precision {precision}")]
    IndexOutOfRange { index: usize, precision: usize },

    #[error("Riordan pair needs nonzero constant terms in both beta and alpha")]
    NotAdmissible,

    #[error("weight series has precision {precision} but the complex has dimension {dimension}")]
    InsufficientPrecision { precision: usize, dimension: usize },

    #[error("matrix dimensions do not agree: {0}")]
    Shape(String),

    #[error("faces must be nonempty sets of distinct vertices")]
    InvalidFace,

    #[error("a complex needs at least one face")]
    EmptyComplex,

    #[error("complex would have {faces} faces, more than the limit of {limit}")]
    FaceLimit { faces: u128, limit: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { position: usize, name: String },

    #[error("invalid input: {0}")]
    Format(String),
}
