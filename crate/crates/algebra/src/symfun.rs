//! Symmetric functions in the power-sum basis.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::partition::Partition;

/// `Σ c_μ p_μ` with no zero coefficients stored.
#[derive(Clone, PartialEq)]
pub struct SymFun<C> {
    terms: BTreeMap<Partition, C>,
}

impl<C: Field> Default for SymFun<C> {
    fn default() -> Self {
        SymFun::zero()
    }
}

impl<C: Field> SymFun<C> {
    pub fn zero() -> Self {
        SymFun { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SymFun::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        SymFun::monomial(Partition::empty(), c)
    }

    pub fn monomial(mu: Partition, c: C) -> Self {
        let mut f = SymFun::zero();
        f.add_term(mu, c);
        f
    }

    /// `p_μ`.
    pub fn p(mu: Partition) -> Self {
        SymFun::monomial(mu, C::one())
    }

    /// `p_k`.
    pub fn pk(k: u32) -> Self {
        SymFun::p(Partition::from_parts(vec![k]))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut f = SymFun::zero();
        for (mu, c) in terms {
            f.add_term(mu, c);
        }
        f
    }

    pub fn add_term(&mut self, mu: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn get(&self, mu: &Partition) -> Option<&C> {
        self.terms.get(mu)
    }

    pub fn coeff(&self, mu: &Partition) -> C {
        self.terms.get(mu).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// The part of degree exactly `n`.
    pub fn homogeneous(&self, n: u32) -> Self {
        SymFun { terms: self.terms.iter().filter(|(mu, _)| mu.size() == n).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: u32) -> Self {
        SymFun { terms: self.terms.iter().filter(|(mu, _)| mu.size() <= n).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return SymFun::zero();
        }
        self.map(|c| c.mul(k))
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> SymFun<D> {
        SymFun::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn try_map<D: Field>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymFun<D>> {
        let mut out = SymFun::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymFun::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x.mul(y));
            }
        }
        out
    }

    /// Product truncated to degree at most `n`.
    pub fn mul_truncated(&self, other: &Self, n: u32) -> Self {
        let mut out = SymFun::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.size() + b.size() <= n {
                    out.add_term(a.union(b), x.mul(y));
                }
            }
        }
        out
    }

    /// Multiplication by `p_k`.
    pub fn mul_pk(&self, k: u32) -> Self {
        SymFun { terms: self.terms.iter().map(|(m, c)| (m.with_part(k), c.clone())).collect() }
    }

    /// `∂/∂p_k`.
    pub fn derive(&self, k: u32) -> Self {
        let mut out = SymFun::zero();
        for (mu, c) in &self.terms {
            let m = mu.multiplicity(k);
            if m > 0 {
                out.add_term(mu.without_part(k).unwrap(), c.mul_int(m as i64));
            }
        }
        out
    }

    /// `p_k^* = k ∂/∂p_k`.
    pub fn pk_star(&self, k: u32) -> Self {
        let mut out = SymFun::zero();
        for (mu, c) in &self.terms {
            let m = mu.multiplicity(k);
            if m > 0 {
                out.add_term(mu.without_part(k).unwrap(), c.mul_int((k * m) as i64));
            }
        }
        out
    }

    /// Substitutes `p_i -> w(i) p_i`.
    pub fn rescale_p(&self, w: impl Fn(u32) -> C) -> Self {
        let mut out = SymFun::zero();
        for (mu, c) in &self.terms {
            let factor = mu.parts().iter().fold(C::one(), |acc, &i| acc.mul(&w(i)));
            out.add_term(mu.clone(), c.mul(&factor));
        }
        out
    }

    /// Substitutes values for every `p_i`.
    pub fn eval_p(&self, value: impl Fn(u32) -> C) -> C {
        let mut acc = C::zero();
        for (mu, c) in &self.terms {
            let term = mu.parts().iter().fold(c.clone(), |acc, &i| acc.mul(&value(i)));
            acc = acc.add(&term);
        }
        acc
    }
}

impl<C: Field> fmt::Display for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mu, c)| if mu.is_empty() { format!("({c})") } else { format!("({c})*p{mu}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Field> fmt::Debug for SymFun<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{int, BigRat};

    type S = SymFun<BigRat>;

    #[test]
    fn derivatives() {
        let f = S::pk(2).mul(&S::pk(1));
        assert_eq!(f.derive(2), S::pk(1));
        assert_eq!(S::pk(2).pk_star(2), S::constant(int(2)));
        let p11 = S::p(part![1, 1]);
        assert_eq!(p11.pk_star(1), S::pk(1).scale(&int(2)));
    }

    #[test]
    fn arithmetic() {
        let f = S::pk(1).add(&S::pk(2));
        assert_eq!(f.sub(&f), S::zero());
        let sq = f.mul(&f);
        assert_eq!(sq.coeff(&part![2, 1]), int(2));
        assert_eq!(sq.mul_truncated(&f, 3).max_degree(), 3);
        assert_eq!(f.eval_p(|i| int(i as i64 + 1)), int(5));
    }
}
