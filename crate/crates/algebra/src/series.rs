//! Truncated series `Σ_n t^n F_n` where `F_n` is a symmetric function of
//! degree `n`. Since the `t`-degree and the `p`-degree agree, the series is
//! stored by degree and `t` is implicit.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::partition::Partition;
use crate::symfun::SymFun;

/// Slice `n` holds the degree-`n` component; all slices up to `precision`
/// are exact.
#[derive(Clone, PartialEq)]
pub struct GradedSeries<C> {
    slices: Vec<SymFun<C>>,
}

impl<C: Field> GradedSeries<C> {
    /// The zero series known through degree `precision`.
    pub fn zero(precision: u32) -> Self {
        GradedSeries { slices: vec![SymFun::zero(); precision as usize + 1] }
    }

    pub fn one(precision: u32) -> Self {
        let mut s = GradedSeries::zero(precision);
        s.slices[0] = SymFun::one();
        s
    }

    /// Splits a symmetric function by degree, keeping degrees up to
    /// `precision`.
    pub fn from_symfun(f: &SymFun<C>, precision: u32) -> Self {
        let mut s = GradedSeries::zero(precision);
        for (mu, c) in f.iter() {
            let n = mu.size();
            if n <= precision {
                s.slices[n as usize].add_term(mu.clone(), c.clone());
            }
        }
        s
    }

    /// Builds from slices; slice `n` must be homogeneous of degree `n`.
    pub fn from_slices(slices: Vec<SymFun<C>>) -> Self {
        assert!(!slices.is_empty(), "a series needs at least the constant slice");
        for (n, s) in slices.iter().enumerate() {
            assert!(s.iter().all(|(mu, _)| mu.size() as usize == n), "slice {n} is not homogeneous");
        }
        GradedSeries { slices }
    }

    pub fn precision(&self) -> u32 {
        self.slices.len() as u32 - 1
    }

    pub fn slice(&self, n: u32) -> &SymFun<C> {
        &self.slices[n as usize]
    }

    pub fn slices(&self) -> &[SymFun<C>] {
        &self.slices
    }

    /// `[p_μ]` of the series.
    pub fn coeff(&self, mu: &Partition) -> C {
        match self.slices.get(mu.size() as usize) {
            Some(s) => s.coeff(mu),
            None => panic!("coefficient of degree {} requested beyond precision {}", mu.size(), self.precision()),
        }
    }

    pub fn to_symfun(&self) -> SymFun<C> {
        self.slices.iter().fold(SymFun::zero(), |acc, s| acc.add(s))
    }

    pub fn truncate(&self, precision: u32) -> Self {
        assert!(precision <= self.precision());
        GradedSeries { slices: self.slices[..=precision as usize].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(SymFun::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        GradedSeries { slices: (0..=p as usize).map(|n| self.slices[n].add(&other.slices[n])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        GradedSeries { slices: (0..=p as usize).map(|n| self.slices[n].sub(&other.slices[n])).collect() }
    }

    pub fn scale(&self, k: &C) -> Self {
        GradedSeries { slices: self.slices.iter().map(|s| s.scale(k)).collect() }
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> GradedSeries<D> {
        GradedSeries { slices: self.slices.iter().map(|s| s.map(&f)).collect() }
    }

    pub fn try_map<D: Field>(&self, f: impl Fn(&C) -> Result<D>) -> Result<GradedSeries<D>> {
        Ok(GradedSeries { slices: self.slices.iter().map(|s| s.try_map(&f)).collect::<Result<_>>()? })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision()) as usize;
        let mut slices = vec![SymFun::zero(); p + 1];
        for i in 0..=p {
            if self.slices[i].is_zero() {
                continue;
            }
            for j in 0..=p - i {
                if !other.slices[j].is_zero() {
                    slices[i + j] = slices[i + j].add(&self.slices[i].mul(&other.slices[j]));
                }
            }
        }
        GradedSeries { slices }
    }

    /// `∂/∂p_i`; precision drops by `i`, so `i` may not exceed it.
    pub fn derive(&self, i: u32) -> Self {
        assert!(i >= 1 && i <= self.precision(), "cannot take ∂/∂p_{i} at precision {}", self.precision());
        let p = self.precision() - i;
        GradedSeries { slices: (0..=p).map(|n| self.slices[(n + i) as usize].derive(i)).collect() }
    }

    /// `log` of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.slices[0].sub(&SymFun::one()).is_zero() {
            return Err(AlgebraError::LogOfNonUnit);
        }
        let p = self.precision() as usize;
        let mut f: Vec<SymFun<C>> = vec![SymFun::zero(); p + 1];
        for n in 1..=p {
            // n F_n = n s_n - Σ_{k<n} k F_k s_{n-k}
            let mut acc = self.slices[n].scale(&C::from_int(n as i64));
            for k in 1..n {
                if !f[k].is_zero() && !self.slices[n - k].is_zero() {
                    acc = acc.sub(&f[k].mul(&self.slices[n - k]).scale(&C::from_int(k as i64)));
                }
            }
            f[n] = acc.scale(&C::from_int(n as i64).inv()?);
        }
        Ok(GradedSeries { slices: f })
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.slices[0].is_zero() {
            return Err(AlgebraError::ExpOfNonZeroConstant);
        }
        let p = self.precision() as usize;
        let mut e: Vec<SymFun<C>> = vec![SymFun::zero(); p + 1];
        e[0] = SymFun::one();
        for n in 1..=p {
            // n E_n = Σ_{k=1}^n k F_k E_{n-k}
            let mut acc = SymFun::zero();
            for k in 1..=n {
                if !self.slices[k].is_zero() && !e[n - k].is_zero() {
                    acc = acc.add(&self.slices[k].mul(&e[n - k]).scale(&C::from_int(k as i64)));
                }
            }
            e[n] = acc.scale(&C::from_int(n as i64).inv()?);
        }
        Ok(GradedSeries { slices: e })
    }

    /// The Euler operator `t d/dt`: multiplies slice `n` by `n`.
    pub fn euler(&self) -> Self {
        GradedSeries { slices: self.slices.iter().enumerate().map(|(n, s)| s.scale(&C::from_int(n as i64))).collect() }
    }
}

impl<C: Field> fmt::Display for GradedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, s) in self.slices.iter().enumerate() {
            if !s.is_zero() {
                writeln!(f, "t^{n}: {s}")?;
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for GradedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedSeries(\n{self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{int, rat, BigRat};

    type G = GradedSeries<BigRat>;

    #[test]
    fn log_of_one_plus_p1() {
        let s = G::from_symfun(&SymFun::one().add(&SymFun::pk(1)), 2);
        let l = s.log().unwrap();
        assert_eq!(l.coeff(&part![1]), int(1));
        assert_eq!(l.coeff(&part![1, 1]), rat(-1, 2));
        assert!(l.slice(0).is_zero());
    }

    #[test]
    fn log_rejects_non_units() {
        let s = G::from_symfun(&SymFun::constant(int(2)), 2);
        assert_eq!(s.log(), Err(AlgebraError::LogOfNonUnit));
        assert_eq!(s.exp(), Err(AlgebraError::ExpOfNonZeroConstant));
    }

    #[test]
    fn derivative_lowers_degree() {
        let f = SymFun::p(part![2, 1]).add(&SymFun::pk(3));
        let s = G::from_symfun(&f, 4);
        let d = s.derive(2);
        assert_eq!(d.precision(), 2);
        assert_eq!(d.to_symfun(), SymFun::pk(1));
    }
}
