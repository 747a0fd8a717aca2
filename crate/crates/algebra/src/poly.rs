//! Sparse multivariate polynomials with integer coefficients in `b`, `u`, `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::mono::{Mono, Var, VarSet};
use crate::rational::BigRat;

/// Terms are kept sorted by strictly decreasing monomial, with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn from_i64(c: i64) -> MPoly {
        MPoly::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::monomial(Mono::var(v, 1), BigInt::one())
    }

    pub fn monomial(m: Mono, c: BigInt) -> MPoly {
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// `c0 + c1 * v`, the workhorse for the linear factors used everywhere.
    pub fn linear(v: Var, c0: i64, c1: i64) -> MPoly {
        MPoly::from_terms(vec![(Mono::ONE, BigInt::from(c0)), (Mono::var(v, 1), BigInt::from(c1))])
    }

    /// Builds a polynomial from terms in any order, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Mono, BigInt)>) -> MPoly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(Mono, &BigInt)> {
        self.terms.first().map(|(m, c)| (*m, c))
    }

    pub fn lc_sign_positive(&self) -> bool {
        self.terms.first().map_or(true, |(_, c)| c.is_positive())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn vars(&self) -> VarSet {
        self.terms.iter().fold(VarSet::EMPTY, |s, (m, _)| s.union(m.vars()))
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_int(&self, c: &BigInt) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    debug_assert!((a % c).is_zero());
                    (*m, a / c)
                })
                .collect(),
        }
    }

    pub fn mul_mono(&self, mono: Mono) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    /// Sign-normalized copy: leading coefficient positive.
    pub fn with_positive_lc(self) -> MPoly {
        if self.lc_sign_positive() {
            self
        } else {
            -self
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division of a polynomial by zero");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some(c) = d.constant_value() {
            return self
                .terms
                .iter()
                .all(|(_, a)| (a % &c).is_zero())
                .then(|| MPoly { terms: self.terms.iter().map(|(m, a)| (*m, a / &c)).collect() });
        }
        let (dm, dc) = d.leading().unwrap();
        if dm.degree() > self.total_degree() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let qm = dm.div_into(rm)?;
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub_scaled_mono(d, qm, &qc);
            quot.push((qm, qc));
        }
        Some(MPoly { terms: quot })
    }

    /// `self - c * m * d`, merging in one pass.
    fn sub_scaled_mono(&self, d: &MPoly, m: Mono, c: &BigInt) -> MPoly {
        let other: Vec<(Mono, BigInt)> = d.terms.iter().map(|(dm, dc)| (dm.mul(m), -(dc * c))).collect();
        merge_add(&self.terms, &other)
    }

    /// Coefficients with respect to `v`: entry `k` is the coefficient of `v^k`,
    /// a polynomial free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.without(v), c.clone()));
        }
        buckets.into_iter().map(MPoly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Mono::var(v, k as u32);
            terms.extend(c.terms.iter().map(|(m, a)| (m.mul(vk), a.clone())));
        }
        MPoly::from_terms(terms)
    }

    /// Evaluates with `values[i]` substituted for the variable of index `i`.
    pub fn eval(&self, values: &[Option<BigRat>; 3]) -> Option<BigRat> {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = BigRat::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    let x = values[v.index()].as_ref()?;
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Substitutes `v -> p / q`, returning `(P, d)` with
    /// `self(v = p/q) = P / q^d`, where `d` is the degree of `self` in `v`.
    pub fn substitute_homogenized(&self, v: Var, p: &MPoly, q: &MPoly) -> (MPoly, u32) {
        let coeffs = self.coeffs_in(v);
        let d = coeffs.len() as u32 - 1;
        if q.is_one() {
            // Horner in p.
            let mut acc = MPoly::zero();
            for c in coeffs.iter().rev() {
                acc = &(&acc * p) + c;
            }
            return (acc, d);
        }
        let mut acc = MPoly::zero();
        let mut p_pow = MPoly::one();
        let q_pows: Vec<MPoly> = {
            let mut v = vec![MPoly::one()];
            for _ in 0..d {
                let next = v.last().unwrap() * q;
                v.push(next);
            }
            v
        };
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&(c * &p_pow) * &q_pows[d as usize - k]);
            }
            if k < d as usize {
                p_pow = &p_pow * p;
            }
        }
        (acc, d)
    }

    /// Substitutes an integer shift `v -> v + k`.
    pub fn shift(&self, v: Var, k: i64) -> MPoly {
        self.substitute_homogenized(v, &MPoly::linear(v, k, 1), &MPoly::one()).0
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let vm = Mono::var(v, 1);
        MPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) > 0)
                .map(|(m, c)| (vm.div_into(*m).unwrap(), c * BigInt::from(m.exp(v))))
                .collect(),
        )
    }
}

fn merge_add(a: &[(Mono, BigInt)], b: &[(Mono, BigInt)]) -> MPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    MPoly { terms: out }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        merge_add(&self.terms, &rhs.terms)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let neg: Vec<(Mono, BigInt)> = rhs.terms.iter().map(|(m, c)| (*m, -c)).collect();
        merge_add(&self.terms, &neg)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return MPoly { terms: large.terms.iter().map(|(lm, lc)| (lm.mul(*m), lc * c)).collect() };
        }
        let mut prods = Vec::with_capacity(self.len() * rhs.len());
        for (am, ac) in &self.terms {
            for (bm, bc) in &rhs.terms {
                prods.push((am.mul(*bm), ac * bc));
            }
        }
        MPoly::from_terms(prods)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> MPoly {
        MPoly::var(Var::B)
    }
    fn n() -> MPoly {
        MPoly::var(Var::N)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = &(&b() * &b()) * &n();
        let p = &p.scale(&BigInt::from(3)) - &MPoly::one();
        assert_eq!(p.to_string(), "3*b^2*N - 1");
        let q = &(&b() + &MPoly::one()) * &(&b() - &MPoly::one());
        assert_eq!(q.to_string(), "b^2 - 1");
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn exact_division() {
        let f = &MPoly::linear(Var::B, 1, 1) * &MPoly::linear(Var::N, -2, 1);
        assert_eq!(f.div_exact(&MPoly::linear(Var::N, -2, 1)), Some(MPoly::linear(Var::B, 1, 1)));
        assert_eq!(f.div_exact(&MPoly::linear(Var::N, 2, 1)), None);
        assert_eq!(f.scale(&BigInt::from(6)).div_exact(&MPoly::from_i64(4)), None);
    }

    #[test]
    fn coefficients_round_trip() {
        let f = &(&b() * &n()).pow(2) + &(&n() - &MPoly::from_i64(5));
        let cs = f.coeffs_in(Var::N);
        assert_eq!(cs.len(), 3);
        assert_eq!(MPoly::from_coeffs_in(Var::N, &cs), f);
    }

    #[test]
    fn substitution() {
        // (N^2 + 1) at N -> N + 2
        let f = &n().pow(2) + &MPoly::one();
        assert_eq!(f.shift(Var::N, 2).to_string(), "N^2 + 4*N + 5");
        // N at N -> 1/b gives 1/b
        let (p, d) = n().substitute_homogenized(Var::N, &MPoly::one(), &b());
        assert_eq!((p, d), (MPoly::one(), 1));
    }
}
