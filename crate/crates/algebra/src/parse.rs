//! Parser for rational expressions in `b`, `u`, `N`.
//!
//! Grammar: sums and differences of products and quotients of powers of
//! integers, variables and parenthesized expressions. `^` takes an integer
//! exponent, possibly negative. The Unicode minus sign is accepted.

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::mono::Var;
use crate::ratfun::RatFun;

pub fn parse_ratfun(s: &str) -> Result<RatFun> {
    let s = s.replace('−', "-");
    let mut p = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    let f = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(f)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{what} at position {}", self.pos))
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = if c == '*' { acc.mul(&f) } else { acc.div(&f)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some('+') {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let e = self.integer()?;
        let e: i32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
        base.pow(if neg { -e } else { e })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFun::from_rat(&num_rational::BigRational::from_integer(n)))
            }
            Some(c) => match Var::from_symbol(&c.to_string()) {
                Some(v) => {
                    self.pos += 1;
                    Ok(RatFun::var(v))
                }
                None => Err(self.error(&format!("unexpected {c:?}"))),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["3*b^2*N - 1", "(b + 1)/(N^2 - 4)", "-u/2", "0", "(2*b + 1)/(3*u)"] {
            let f = parse_ratfun(s).unwrap();
            assert_eq!(parse_ratfun(&f.to_string()).unwrap(), f, "{s}");
        }
        assert_eq!(parse_ratfun("3*b^2*N − 1").unwrap().to_string(), "3*b^2*N - 1");
        assert_eq!(parse_ratfun("N^-1*N").unwrap().to_string(), "1");
    }

    #[test]
    fn errors() {
        assert!(parse_ratfun("1/(b-b)").is_err());
        assert!(parse_ratfun("x").is_err());
        assert!(parse_ratfun("(b").is_err());
    }
}
