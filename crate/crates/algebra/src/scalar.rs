//! Tagged scalars: exact rationals or symbolic rational functions.

use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, Result};
use crate::mono::{Var, VarSet};
use crate::parse::parse_ratfun;
use crate::ratfun::RatFun;
use crate::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Exact(BigRat),
    Symbolic(RatFun),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(x) => num_traits::Zero::is_zero(x),
            Scalar::Symbolic(f) => f.is_zero(),
        }
    }

    /// Turns an exact scalar into a constant rational function declared over
    /// `vars`; symbolic scalars are redeclared.
    pub fn promote(&self, vars: VarSet) -> Result<Scalar> {
        match self {
            Scalar::Exact(x) => Ok(Scalar::Symbolic(RatFun::from_rat(x).with_vars(vars)?)),
            Scalar::Symbolic(f) => Ok(Scalar::Symbolic(f.clone().with_vars(vars)?)),
        }
    }

    pub fn apply(&self, other: &Scalar, op: Op) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(match op {
                Op::Add => a + b,
                Op::Sub => a - b,
                Op::Mul => a * b,
                Op::Div => {
                    if num_traits::Zero::is_zero(b) {
                        return Err(AlgebraError::DivisionByZero);
                    }
                    a / b
                }
            })),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => {
                let (va, vb) = (a.vars(), b.vars());
                if !va.is_empty() && !vb.is_empty() && va != vb {
                    return Err(AlgebraError::VariableMismatch(va.to_string(), vb.to_string()));
                }
                Ok(Scalar::Symbolic(match op {
                    Op::Add => a.add(b),
                    Op::Sub => a.sub(b),
                    Op::Mul => a.mul(b),
                    Op::Div => a.div(b)?,
                }))
            }
            _ => Err(AlgebraError::VariantMismatch),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.apply(other, Op::Add)
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.apply(other, Op::Sub)
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.apply(other, Op::Mul)
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.apply(other, Op::Div)
    }

    pub fn eval(&self, assignment: &[(Var, BigRat)]) -> Result<BigRat> {
        match self {
            Scalar::Exact(x) => Ok(x.clone()),
            Scalar::Symbolic(f) => f.eval(assignment),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(x) => write!(f, "{x}"),
            Scalar::Symbolic(r) => write!(f, "{r}"),
        }
    }
}

/// Strings without variables parse as exact scalars.
impl FromStr for Scalar {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Scalar> {
        let f = parse_ratfun(s)?;
        match f.as_constant() {
            Some(c) if f.vars().is_empty() => Ok(Scalar::Exact(c)),
            _ => Ok(Scalar::Symbolic(f)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn exact_sum() {
        let s = Scalar::Exact(rat(1, 2)).add(&Scalar::Exact(rat(1, 3))).unwrap();
        assert_eq!(s, Scalar::Exact(rat(5, 6)));
    }

    #[test]
    fn symbolic_cancellation() {
        let x: Scalar = "b/(1+b)".parse().unwrap();
        let y: Scalar = "1+b".parse().unwrap();
        assert_eq!(x.mul(&y).unwrap().to_string(), "b");
    }

    #[test]
    fn errors() {
        let b: Scalar = "b".parse().unwrap();
        let n: Scalar = "N".parse().unwrap();
        assert!(matches!(b.add(&n), Err(AlgebraError::VariableMismatch(_, _))));
        assert!(matches!(b.add(&Scalar::Exact(rat(1, 2))), Err(AlgebraError::VariantMismatch)));
        assert!(matches!(Scalar::Exact(rat(1, 2)).div(&Scalar::Exact(rat(0, 1))), Err(AlgebraError::DivisionByZero)));
        assert!(matches!(b.div(&"0".parse::<Scalar>().unwrap().promote(VarSet::EMPTY).unwrap()), Err(AlgebraError::DivisionByZero)));
        let half = Scalar::Exact(rat(1, 2)).promote(VarSet::of(&[Var::B])).unwrap();
        assert_eq!(b.add(&half).unwrap().to_string(), "(2*b + 1)/2");
    }
}
