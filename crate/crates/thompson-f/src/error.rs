//! Crate-wide error type with stable machine-readable codes.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index 0 cannot be shifted down")]
    MinIndexZero,
    #[error("operands live in different coefficient fields: {0}")]
    FieldMismatch(String),
    #[error("the zero polynomial has no degree and is rejected here")]
    ZeroPolynomial,
    #[error("not left-divisible: {0}")]
    NotDivisible(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("input pair is not a solution of the required equation: {0}")]
    InvalidSolution(String),
    #[error("input pair fails the defining identity: {0}")]
    NotASolution(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("unsupported generator: {0}")]
    UnsupportedGenerator(String),
    #[error("word does not reduce to the identity")]
    NotARelation,
    #[error("relation telescopes to the zero pair")]
    DegenerateRelation,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("flow value missing for internal edge: {0}")]
    MissingEdgeValue(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("support is empty: {0}")]
    EmptySupport(String),
    #[error("no nonzero solution within the given degree/index bounds")]
    NoSolutionInBounds,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("io: {0}")]
    Io(String),
    #[error("internal consistency check failed: {0}")]
    AssertionFailure(String),
}

impl Error {
    /// Stable code for machine consumption (CLI JSON errors, exit-code mapping).
    pub fn code(&self) -> &'static str {
        match self {
            Error::MinIndexZero => "MinIndexZero",
            Error::FieldMismatch(_) => "FieldMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotDivisible(_) => "NotDivisible",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::ResourceLimit(_) => "ResourceLimit",
            Error::InvalidSolution(_) => "InvalidSolution",
            Error::NotASolution(_) => "NotASolution",
            Error::LengthMismatch(_) => "LengthMismatch",
            Error::UnsupportedGenerator(_) => "UnsupportedGenerator",
            Error::NotARelation => "NotARelation",
            Error::DegenerateRelation => "DegenerateRelation",
            Error::EmptySet => "EmptySet",
            Error::MissingEdgeValue(_) => "MissingEdgeValue",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::EmptySupport(_) => "EmptySupport",
            Error::NoSolutionInBounds => "NoSolutionInBounds",
            Error::Syntax { .. } => "Syntax",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Io(_) => "Io",
            Error::AssertionFailure(_) => "AssertionFailure",
        }
    }

    /// Findings are verified negative results, not failures; the CLI exits 2 on them.
    pub fn is_finding(&self) -> bool {
        matches!(self, Error::NoSolutionInBounds | Error::NotDivisible(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
