//! Normalized rational functions over the rationals in `b`, `u`, `N`.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::gcd::gcd;
use crate::mono::{Var, VarSet};
use crate::poly::MPoly;
use crate::rational::BigRat;

/// `num / den` with integer-coefficient polynomials, `gcd(num, den) = 1`
/// (integer content included) and `den` having positive leading coefficient.
/// Zero is stored as `0 / 1`.
///
/// `vars` is the declared variable set; it always contains the variables that
/// actually occur and is ignored by equality.
#[derive(Clone)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
    vars: VarSet,
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for RatFun {}

impl Hash for RatFun {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun { num: MPoly::zero(), den: MPoly::one(), vars: VarSet::EMPTY }
    }

    pub fn one() -> RatFun {
        RatFun::from_int(1)
    }

    pub fn from_int(n: i64) -> RatFun {
        RatFun { num: MPoly::from_i64(n), den: MPoly::one(), vars: VarSet::EMPTY }
    }

    pub fn from_rat(r: &BigRat) -> RatFun {
        RatFun { num: MPoly::constant(r.numer().clone()), den: MPoly::constant(r.denom().clone()), vars: VarSet::EMPTY }
    }

    pub fn var(v: Var) -> RatFun {
        RatFun { num: MPoly::var(v), den: MPoly::one(), vars: VarSet::of(&[v]) }
    }

    pub fn from_poly(p: MPoly) -> RatFun {
        let vars = p.vars();
        RatFun { num: p, den: MPoly::one(), vars }
    }

    /// `c0 + c1 * v`.
    pub fn linear(v: Var, c0: i64, c1: i64) -> RatFun {
        RatFun::from_poly(MPoly::linear(v, c0, c1))
    }

    /// Normalizes `num / den`.
    pub fn new(num: MPoly, den: MPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let vars = num.vars().union(den.vars());
        Ok(RatFun::reduce(num, den, vars))
    }

    fn reduce(num: MPoly, den: MPoly, vars: VarSet) -> RatFun {
        if num.is_zero() {
            return RatFun { num, den: MPoly::one(), vars };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        RatFun::fix_sign(num, den, vars)
    }

    fn fix_sign(num: MPoly, den: MPoly, vars: VarSet) -> RatFun {
        if den.lc_sign_positive() {
            RatFun { num, den, vars }
        } else {
            RatFun { num: -num, den: -den, vars }
        }
    }

    /// Builds `num / (c * prod f_i^e_i)` where every `f_i` is irreducible,
    /// reducing by trial division instead of a general gcd.
    pub fn from_factored(num: MPoly, c: BigInt, factors: &[(MPoly, u32)]) -> Result<RatFun> {
        if c.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut vars = num.vars();
        for (f, _) in factors {
            vars = vars.union(f.vars());
        }
        if num.is_zero() {
            return Ok(RatFun { num, den: MPoly::one(), vars });
        }
        let mut num = num;
        let mut den = MPoly::one();
        for (f, e) in factors {
            let mut left = *e;
            while left > 0 {
                match num.div_exact(f) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den = &den * &f.pow(left);
            }
        }
        let k = num.content().gcd(&(den.content() * &c));
        let num = num.div_int(&k);
        let den = den.scale(&(c / &k));
        Ok(RatFun::fix_sign(num, den, vars))
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    /// The variables that actually occur.
    pub fn used_vars(&self) -> VarSet {
        self.num.vars().union(self.den.vars())
    }

    /// Declares a variable set; it must contain every variable in use.
    pub fn with_vars(mut self, vars: VarSet) -> Result<RatFun> {
        if !self.used_vars().is_subset(vars) {
            return Err(AlgebraError::VariableMismatch(self.used_vars().to_string(), vars.to_string()));
        }
        self.vars = vars;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRat::new(n, d))
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        let vars = self.vars.union(other.vars);
        if self.is_zero() {
            return RatFun { vars, ..other.clone() };
        }
        if other.is_zero() {
            return RatFun { vars, ..self.clone() };
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b == d {
            let num = a + c;
            if b.is_one() {
                return RatFun { num, den: MPoly::one(), vars };
            }
            return RatFun::reduce_against(num, b.clone(), b, vars);
        }
        if let (Some(bi), Some(di)) = (b.constant_value(), d.constant_value()) {
            let l = bi.lcm(&di);
            let num = &a.scale(&(&l / &bi)) + &c.scale(&(&l / &di));
            let k = num.content().gcd(&l);
            return RatFun { num: num.div_int(&k), den: MPoly::constant(l / k), vars };
        }
        let g = gcd(b, d);
        if g.is_one() {
            let num = &(a * d) + &(c * b);
            return RatFun::fix_sign(num, b * d, vars);
        }
        let b1 = b.div_exact(&g).expect("gcd divides");
        let d1 = d.div_exact(&g).expect("gcd divides");
        let num = &(a * &d1) + &(c * &b1);
        let den = &b1 * d;
        RatFun::reduce_against(num, den, &g, vars)
    }

    /// Reduces `num / den` knowing that any common factor divides `g`.
    fn reduce_against(num: MPoly, den: MPoly, g: &MPoly, vars: VarSet) -> RatFun {
        if num.is_zero() {
            return RatFun { num, den: MPoly::one(), vars };
        }
        let h = gcd(&num, g);
        if h.is_one() {
            return RatFun::fix_sign(num, den, vars);
        }
        RatFun::fix_sign(num.div_exact(&h).expect("gcd divides"), den.div_exact(&h).expect("gcd divides"), vars)
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone(), vars: self.vars }
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        let vars = self.vars.union(other.vars);
        if self.is_zero() || other.is_zero() {
            return RatFun { vars, ..RatFun::zero() };
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b.is_one() && d.is_one() {
            return RatFun { num: a * c, den: MPoly::one(), vars };
        }
        let g1 = gcd(a, d);
        let g2 = gcd(c, b);
        let (a, d) = split(a, d, &g1);
        let (c, b) = split(c, b, &g2);
        RatFun::fix_sign(&a * &c, &b * &d, vars)
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFun::fix_sign(self.den.clone(), self.num.clone(), self.vars))
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<RatFun> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(RatFun { num: self.num.pow(e as u32), den: self.den.pow(e as u32), vars: self.vars })
    }

    pub fn scale_int(&self, k: i64) -> RatFun {
        self.mul(&RatFun::from_int(k))
    }

    /// Evaluates at rational values for the used variables.
    pub fn eval(&self, assignment: &[(Var, BigRat)]) -> Result<BigRat> {
        let mut values: [Option<BigRat>; 3] = [None, None, None];
        for (v, x) in assignment {
            values[v.index()] = Some(x.clone());
        }
        for v in self.used_vars().iter() {
            if values[v.index()].is_none() {
                return Err(AlgebraError::MissingAssignment(v.to_string()));
            }
        }
        let n = self.num.eval(&values).expect("assignment checked");
        let d = self.den.eval(&values).expect("assignment checked");
        if d.is_zero() {
            let shown: Vec<String> = assignment.iter().map(|(v, x)| format!("{v}={x}")).collect();
            return Err(AlgebraError::PoleAtAssignment(shown.join(",")));
        }
        Ok(n / d)
    }

    /// Substitutes `v -> r` for a rational function `r`.
    pub fn substitute(&self, v: Var, r: &RatFun) -> Result<RatFun> {
        if !self.used_vars().contains(v) {
            return Ok(RatFun { vars: self.vars.union(r.vars), ..self.clone() });
        }
        let (p, q) = (&r.num, &r.den);
        let (n, dn) = self.num.substitute_homogenized(v, p, q);
        let (d, dd) = self.den.substitute_homogenized(v, p, q);
        let (n, d) = if dn >= dd { (n, &d * &q.pow(dn - dd)) } else { (&n * &q.pow(dd - dn), d) };
        if d.is_zero() {
            return Err(AlgebraError::PoleAtAssignment(format!("{v}={r}")));
        }
        let vars = self.vars.without(v).union(r.vars);
        Ok(RatFun::reduce(n, d, vars))
    }

    /// Substitutes `v -> v + k`. Shifts are automorphisms, so the result is
    /// already reduced.
    pub fn shift(&self, v: Var, k: i64) -> RatFun {
        let num = self.num.shift(v, k);
        let den = self.den.shift(v, k);
        RatFun::fix_sign(num, den, self.vars)
    }

    /// Substitutes a rational constant for `v`.
    pub fn specialize(&self, v: Var, x: &BigRat) -> Result<RatFun> {
        let mut out = self.substitute(v, &RatFun::from_rat(x))?;
        out.vars = self.vars.without(v);
        Ok(out)
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> RatFun {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        let d = &self.den * &self.den;
        RatFun::reduce(n, d, self.vars)
    }

    /// Taylor coefficients `[v^0], ..., [v^order]` at `v = 0`, as rational
    /// functions in the remaining variables.
    pub fn taylor(&self, v: Var, order: u32) -> Result<Vec<RatFun>> {
        let vars = self.vars.without(v);
        let num = self.num.coeffs_in(v);
        let den = self.den.coeffs_in(v);
        if den[0].is_zero() {
            return Err(AlgebraError::PoleAtAssignment(format!("{v}=0")));
        }
        let d0 = RatFun::from_poly(den[0].clone());
        let mut out: Vec<RatFun> = Vec::with_capacity(order as usize + 1);
        for k in 0..=order as usize {
            let mut acc = num.get(k).map_or_else(RatFun::zero, |c| RatFun::from_poly(c.clone()));
            for j in 1..den.len().min(k + 1) {
                if !den[j].is_zero() && !out[k - j].is_zero() {
                    acc = acc.sub(&RatFun::from_poly(den[j].clone()).mul(&out[k - j]));
                }
            }
            let mut c = acc.div(&d0)?;
            c.vars = vars;
            out.push(c);
        }
        Ok(out)
    }
}

fn split(x: &MPoly, y: &MPoly, g: &MPoly) -> (MPoly, MPoly) {
    if g.is_one() {
        (x.clone(), y.clone())
    } else {
        (x.div_exact(g).expect("gcd divides"), y.div_exact(g).expect("gcd divides"))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MPoly| {
            if p.len() > 1 || p.leading().is_some_and(|(m, c)| !m.is_one() && !c.abs().is_one()) {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl From<BigRat> for RatFun {
    fn from(r: BigRat) -> RatFun {
        RatFun::from_rat(&r)
    }
}

impl From<i64> for RatFun {
    fn from(n: i64) -> RatFun {
        RatFun::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn b() -> RatFun {
        RatFun::var(Var::B)
    }

    #[test]
    fn cancellation() {
        let one_plus_b = RatFun::linear(Var::B, 1, 1);
        let f = b().div(&one_plus_b).unwrap().mul(&one_plus_b);
        assert_eq!(f, b());
        assert!(f.is_polynomial());
    }

    #[test]
    fn canonical_under_scaling() {
        let n = &MPoly::var(Var::B) + &MPoly::from_i64(2);
        let d = MPoly::linear(Var::N, -3, 2);
        let f = RatFun::new(n.clone(), d.clone()).unwrap();
        for k in [-7i64, -1, 3, 12] {
            let g = RatFun::new(n.scale(&BigInt::from(k)), d.scale(&BigInt::from(k))).unwrap();
            assert_eq!(format!("{:?}", (g.numer(), g.denom())), format!("{:?}", (f.numer(), f.denom())));
        }
    }

    #[test]
    fn taylor_of_geometric_series() {
        // 1/(1 - b u) = sum (b u)^k
        let u = RatFun::var(Var::U);
        let f = RatFun::one().div(&RatFun::one().sub(&b().mul(&u))).unwrap();
        let t = f.taylor(Var::U, 3).unwrap();
        assert_eq!(t[0], RatFun::one());
        assert_eq!(t[3], b().pow(3).unwrap());
        assert!(RatFun::one().div(&u).unwrap().taylor(Var::U, 1).is_err());
    }

    #[test]
    fn evaluation_and_poles() {
        let f = RatFun::one().div(&RatFun::linear(Var::N, -2, 1)).unwrap();
        assert_eq!(f.eval(&[(Var::N, int(3))]).unwrap(), int(1));
        assert!(matches!(f.eval(&[(Var::N, int(2))]), Err(AlgebraError::PoleAtAssignment(_))));
        assert!(matches!(f.eval(&[]), Err(AlgebraError::MissingAssignment(_))));
    }

    #[test]
    fn sums_with_shared_denominators() {
        // 1/(b(b+1)) + 1/(b+1) = 1/b
        let b1 = RatFun::linear(Var::B, 1, 1);
        let x = RatFun::one().div(&b().mul(&b1)).unwrap();
        let y = RatFun::one().div(&b1).unwrap();
        assert_eq!(x.add(&y), RatFun::one().div(&b()).unwrap());
        assert_eq!(RatFun::from_rat(&rat(1, 2)).add(&RatFun::from_rat(&rat(1, 3))), RatFun::from_rat(&rat(5, 6)));
    }

    #[test]
    fn substitutions() {
        let n = RatFun::var(Var::N);
        let f = RatFun::one().div(&n.sub(&RatFun::from_int(2))).unwrap();
        assert_eq!(f.shift(Var::N, 2), RatFun::one().div(&n).unwrap());
        let u = RatFun::var(Var::U);
        // u / (1 + u) with u -> 1/N is 1 / (N + 1)
        let g = u.div(&u.add(&RatFun::one())).unwrap();
        let h = g.substitute(Var::U, &n.inv().unwrap()).unwrap();
        assert_eq!(h, RatFun::one().div(&RatFun::linear(Var::N, 1, 1)).unwrap());
        assert_eq!(h.vars(), VarSet::of(&[Var::N]));
    }

    #[test]
    fn factored_construction_matches_generic() {
        let f1 = MPoly::linear(Var::B, 1, 1);
        let f2 = &MPoly::linear(Var::U, 1, 2) + &MPoly::var(Var::B);
        let num = &(&f1 * &f1) * &MPoly::linear(Var::U, 3, 1).scale(&BigInt::from(4));
        let den_factors = vec![(f1.clone(), 3), (f2.clone(), 1)];
        let c = BigInt::from(6);
        let fac = RatFun::from_factored(num.clone(), c.clone(), &den_factors).unwrap();
        let den = (&f1.pow(3) * &f2).scale(&c);
        assert_eq!(fac, RatFun::new(num, den).unwrap());
    }
}
