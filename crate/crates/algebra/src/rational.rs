//! Arbitrary-precision rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{AlgebraError, Result};

/// Always reduced with a positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with optional surrounding whitespace.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(AlgebraError::DivisionByZero);
            }
            Ok(BigRat::new(n, d))
        }
        None => Ok(BigRat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Falling factorial `x (x-1) ... (x-k+1)`.
pub fn falling(x: &BigRat, k: u32) -> BigRat {
    let mut acc = int(1);
    let mut y = x.clone();
    for _ in 0..k {
        acc *= &y;
        y -= int(1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_sums() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(parse_rat(" -4/6 ").unwrap(), rat(-2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn falling_factorials() {
        let v = falling(&int(8), 4) * falling(&int(6), 4);
        assert_eq!(v, int(604800));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
