use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: {dividend} is not a multiple of {divisor}")]
    NonExactDivision { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid field specification: {0}")]
    InvalidSpec(String),

    #[error("cannot parse field spec at position {pos}: expected {expected}")]
    FieldSpecSyntax { pos: usize, expected: String },

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("Cartan matrix is not symmetrizable: {0}")]
    NotSymmetrizable(String),

    #[error("unknown root system `{0}`")]
    UnknownSystem(String),

    #[error("paths have different heights: {left} vs {right}")]
    HeightMismatch { left: String, right: String },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
