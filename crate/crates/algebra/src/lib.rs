//! Exact arithmetic for the monotone Hurwitz toolkit: big rationals,
//! polynomials and normalized rational functions in the formal variables
//! `b`, `u`, `N`, tagged scalars, and truncated series of symmetric
//! functions in the power-sum basis.

pub mod error;
pub mod field;
pub mod gcd;
pub mod mono;
pub mod parse;
pub mod partition;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod symfun;

pub use error::{AlgebraError, Result};
pub use field::Field;
pub use mono::{Mono, Var, VarSet};
pub use parse::parse_ratfun;
pub use partition::Partition;
pub use poly::MPoly;
pub use ratfun::RatFun;
pub use rational::{int, rat, BigRat};
pub use scalar::Scalar;
pub use series::GradedSeries;
pub use symfun::SymFun;
