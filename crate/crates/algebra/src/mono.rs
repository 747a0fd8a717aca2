//! Formal variables and packed monomials.
//!
//! A monomial in `b`, `u`, `N` is stored in one `u64`: bits 48..63 hold the
//! total degree, then 16 bits each for the exponents of `N`, `u` and `b`.
//! Comparing the packed integers is graded lexicographic order with
//! `b < u < N`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    B,
    U,
    N,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::B, Var::U, Var::N];

    pub fn index(self) -> usize {
        match self {
            Var::B => 0,
            Var::U => 1,
            Var::N => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::B => "b",
            Var::U => "u",
            Var::N => "N",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Var> {
        match s {
            "b" => Some(Var::B),
            "u" => Some(Var::U),
            "N" => Some(Var::N),
            _ => None,
        }
    }

    fn shift(self) -> u32 {
        16 * self.index() as u32
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A subset of `{b, u, N}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        vars.iter().fold(VarSet::EMPTY, |s, &v| s.with(v))
    }

    pub fn with(self, v: Var) -> VarSet {
        VarSet(self.0 | (1 << v.index()))
    }

    pub fn without(self, v: Var) -> VarSet {
        VarSet(self.0 & !(1 << v.index()))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |&v| self.contains(v))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Var::symbol).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

const FIELD: u64 = 0xFFFF;
const DEG_SHIFT: u32 = 48;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(v: Var, e: u32) -> Mono {
        assert!(e <= FIELD as u32, "exponent {e} out of range");
        Mono(((e as u64) << DEG_SHIFT) | ((e as u64) << v.shift()))
    }

    pub fn from_exps(e: [u32; 3]) -> Mono {
        let deg: u32 = e.iter().sum();
        assert!(deg <= FIELD as u32, "monomial degree {deg} out of range");
        Mono(((deg as u64) << DEG_SHIFT) | ((e[2] as u64) << 32) | ((e[1] as u64) << 16) | e[0] as u64)
    }

    pub fn exps(self) -> [u32; 3] {
        [self.exp(Var::B), self.exp(Var::U), self.exp(Var::N)]
    }

    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & FIELD) as u32
    }

    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Mono) -> Mono {
        debug_assert!(self.degree() + other.degree() <= FIELD as u32);
        Mono(self.0 + other.0)
    }

    /// Does `self` divide `other`?
    pub fn divides(self, other: Mono) -> bool {
        self.exp(Var::B) <= other.exp(Var::B)
            && self.exp(Var::U) <= other.exp(Var::U)
            && self.exp(Var::N) <= other.exp(Var::N)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(self, other: Mono) -> Option<Mono> {
        if self.divides(other) {
            Some(Mono(other.0 - self.0))
        } else {
            None
        }
    }

    /// The monomial with the exponent of `v` removed.
    pub fn without(self, v: Var) -> Mono {
        let e = self.exp(v) as u64;
        Mono(self.0 - (e << v.shift()) - (e << DEG_SHIFT))
    }

    pub fn vars(self) -> VarSet {
        Var::ALL.iter().fold(VarSet::EMPTY, |s, &v| if self.exp(v) > 0 { s.with(v) } else { s })
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mono({self})")
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trips() {
        let m = Mono::from_exps([3, 0, 7]);
        assert_eq!(m.exps(), [3, 0, 7]);
        assert_eq!(m.degree(), 10);
        assert_eq!(m.without(Var::N).exps(), [3, 0, 0]);
        assert_eq!(m.without(Var::N).degree(), 3);
    }

    #[test]
    fn order_is_graded_lex_with_n_largest() {
        let b = Mono::var(Var::B, 1);
        let u = Mono::var(Var::U, 1);
        let n = Mono::var(Var::N, 1);
        assert!(b < u && u < n);
        assert!(n < Mono::var(Var::B, 2));
        assert!(Mono::from_exps([1, 1, 0]) < Mono::from_exps([0, 0, 2]));
    }

    #[test]
    fn divisibility() {
        let a = Mono::from_exps([1, 2, 0]);
        let b = Mono::from_exps([2, 2, 1]);
        assert!(a.divides(b));
        assert!(!b.divides(a));
        assert_eq!(a.div_into(b), Some(Mono::from_exps([1, 0, 1])));
        assert!(!Mono::from_exps([0, 3, 0]).divides(b));
        assert_eq!(Mono::from_exps([1, 0, 0]).to_string(), "b");
        assert_eq!(Mono::from_exps([2, 0, 1]).to_string(), "b^2*N");
    }
}
