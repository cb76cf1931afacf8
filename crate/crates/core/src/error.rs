use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("both polynomials are constant in the elimination variable")]
    ConstantInVariable,
    #[error("constant c must be nonzero")]
    ZeroConstant,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("reducible input curve: {0}")]
    Reducible(String),
    #[error("parametrization is not proper: {0}")]
    NotProper(String),
    #[error("polynomial system has infinitely many solutions")]
    PositiveDimensional,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero-denominator",
            Error::BothZero => "gcd-both-zero",
            Error::ConstantInVariable => "resultant-constant",
            Error::ZeroConstant => "zero-constant",
            Error::Parse { .. } => "parse",
            Error::InvalidInput(_) => "invalid-input",
            Error::Reducible(_) => "reducible-input",
            Error::NotProper(_) => "improper-parametrization",
            Error::PositiveDimensional => "positive-dimensional",
            Error::Internal(_) => "internal",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::PositiveDimensional)
    }
}
