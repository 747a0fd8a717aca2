use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable sets {0} and {1} do not match")]
    VariableMismatch(String, String),
    #[error("cannot combine an exact scalar with a symbolic one without promotion")]
    VariantMismatch,
    #[error("denominator vanishes at {0}")]
    PoleAtAssignment(String),
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("logarithm of a series whose constant term is not 1")]
    LogOfNonUnit,
    #[error("exponential of a series with a nonzero constant term")]
    ExpOfNonZeroConstant,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
