use thiserror::Error;

/// Errors surfaced by the symbolic kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero: divisor canonicalizes to 0")]
    DivisionByZero,
    #[error("pole at sample point: {0}")]
    PoleAtPoint(String),
    #[error("unknown coordinate `{name}` in chart `{chart}`")]
    UnknownCoordinate { chart: String, name: String },
    #[error("chart mismatch: expected `{expected}`, got `{got}`")]
    ChartMismatch { expected: String, got: String },
    #[error("basis mismatch between Lie algebra elements")]
    BasisMismatch,
    #[error("structure constants not antisymmetric at ({i},{j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("series has non-unit leading term; cannot invert")]
    NonUnitLeadingTerm,
    #[error("element is not in the image of the S* x S embedding (y = -1 locus)")]
    NotInImage,
    #[error("function is outside the polynomial-exponential class: {0}")]
    UnsupportedClass(String),
    #[error("exponent substituted into an atom is not a linear form: {0}")]
    NonLinearExponent(String),
    #[error("no exact rational {1}-th root of {0}")]
    NonRationalRoot(String, u32),
    #[error("missing coordinate assignment for `{0}`")]
    MissingAssignment(String),
    #[error("chart map has no verified inverse")]
    MissingInverse,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
