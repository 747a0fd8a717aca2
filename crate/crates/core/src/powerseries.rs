//! Truncated univariate power series over an exact field.

use std::fmt;

use monohurwitz_algebra::{AlgebraError, BigRat, Field};

/// `Σ c_k x^k` known through `x^prec`; `prec = None` marks an exact
/// polynomial, which is how constants enter.
#[derive(Clone, Debug)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
    prec: Option<u32>,
}

impl<C: Field> PowerSeries<C> {
    pub fn new(coeffs: Vec<C>, prec: u32) -> Self {
        PowerSeries { coeffs, prec: Some(prec) }.normalized()
    }

    pub fn exact(coeffs: Vec<C>) -> Self {
        PowerSeries { coeffs, prec: None }.normalized()
    }

    pub fn constant(c: C) -> Self {
        PowerSeries::exact(vec![c])
    }

    /// The variable `x` itself.
    pub fn x() -> Self {
        PowerSeries::exact(vec![C::zero(), C::one()])
    }

    fn normalized(mut self) -> Self {
        if let Some(p) = self.prec {
            self.coeffs.truncate(p as usize + 1);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn precision(&self) -> Option<u32> {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        let prec = self.prec.map_or(prec, |p| p.min(prec));
        PowerSeries { coeffs: self.coeffs.clone(), prec: Some(prec) }.normalized()
    }

    pub fn coeff(&self, k: u32) -> C {
        if let Some(p) = self.prec {
            assert!(k <= p, "coefficient x^{k} requested beyond precision {p}");
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(C::zero)
    }

    /// Stored coefficients; trailing zeros are dropped.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    fn min_prec(&self, other: &Self) -> Option<u32> {
        match (self.prec, other.prec) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { coeffs: self.coeffs.iter().map(f).collect(), prec: self.prec }.normalized()
    }
}

impl<C: Field> PartialEq for PowerSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        let len = match self.min_prec(other) {
            Some(p) => len.min(p as usize + 1),
            None => len,
        };
        let get = |s: &Self, k: usize| s.coeffs.get(k).cloned().unwrap_or_else(C::zero);
        (0..len).all(|k| get(self, k) == get(other, k))
    }
}

impl<C: Field> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(p) = self.prec {
            write!(f, " + O(x^{})", p + 1)?;
        }
        Ok(())
    }
}

impl<C: Field> Field for PowerSeries<C> {
    fn zero() -> Self {
        PowerSeries::exact(Vec::new())
    }

    fn one() -> Self {
        PowerSeries::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        PowerSeries { coeffs, prec: self.min_prec(other) }.normalized()
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let prec = self.min_prec(other);
        if self.is_zero() || other.is_zero() {
            return PowerSeries { coeffs: Vec::new(), prec };
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(p) = prec {
            len = len.min(p as usize + 1);
        }
        let mut coeffs = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        PowerSeries { coeffs, prec }.normalized()
    }

    fn neg(&self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(Field::neg).collect(), prec: self.prec }
    }

    fn inv(&self) -> monohurwitz_algebra::Result<Self> {
        let c0 = match self.coeffs.first() {
            Some(c) if !c.is_zero() => c.clone(),
            _ => return Err(AlgebraError::DivisionByZero),
        };
        let c0_inv = c0.inv()?;
        if self.coeffs.len() == 1 {
            return Ok(PowerSeries { coeffs: vec![c0_inv], prec: self.prec });
        }
        let Some(p) = self.prec else {
            return Err(AlgebraError::DivisionByZero);
        };
        let mut out: Vec<C> = Vec::with_capacity(p as usize + 1);
        out.push(c0_inv.clone());
        for k in 1..=p as usize {
            let mut acc = C::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.neg().mul(&c0_inv));
        }
        Ok(PowerSeries { coeffs: out, prec: Some(p) }.normalized())
    }

    fn from_rat(r: &BigRat) -> Self {
        PowerSeries::constant(C::from_rat(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::{int, rat};

    type S = PowerSeries<BigRat>;

    #[test]
    fn geometric_series() {
        let one_minus_x = S::one().sub(&S::x()).with_precision(5);
        let g = one_minus_x.inv().unwrap();
        assert_eq!(g.coeffs(), vec![int(1); 6].as_slice());
        assert!(g.mul(&one_minus_x).is_one());
    }

    #[test]
    fn truncation_and_units() {
        let x = S::x().with_precision(3);
        assert!(x.pow(4).is_zero());
        assert!(x.inv().is_err());
        let c = S::from_rat(&rat(2, 3));
        assert_eq!(c.inv().unwrap().coeff(0), rat(3, 2));
    }
}
