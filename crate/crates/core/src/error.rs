use monohurwitz_algebra::{AlgebraError, Partition};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("singular linear system while constructing {0}")]
    SingularSystem(String),
    #[error("cannot pad {lambda} to {k} entries")]
    InvalidPadding { lambda: Partition, k: usize },
    #[error("Pfaffian of a matrix of odd size {0}")]
    OddSize(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("repeated spectral value {0}")]
    DegenerateSpectrum(String),
    #[error("division by t^{power} leaves a nonzero coefficient at t^{degree}")]
    NonCancellingPole { power: u32, degree: u32 },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
