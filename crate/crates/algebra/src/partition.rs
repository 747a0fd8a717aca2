//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(k, k, ..., k)` with `n` parts.
    pub fn rectangle(k: u32, n: usize) -> Partition {
        Partition::from_parts(vec![k; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("parts are indexed from 1");
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (p, m) in self.multiplicities() {
            for k in 1..=m {
                acc *= BigInt::from(p) * BigInt::from(k);
            }
        }
        acc
    }

    /// Boxes as 1-based `(row, col)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r as u32 + 1, c)))
    }

    pub fn arm(&self, row: u32, col: u32) -> u32 {
        self.part(row as usize) - col
    }

    pub fn leg(&self, row: u32, col: u32) -> u32 {
        self.0.iter().filter(|&&p| p >= col).count() as u32 - row
    }

    /// Classical hook product `prod (a + l + 1)`.
    pub fn hook_product(&self) -> BigInt {
        self.boxes().fold(BigInt::from(1), |acc, (r, c)| acc * BigInt::from(self.arm(r, c) + self.leg(r, c) + 1))
    }

    /// Number of standard Young tableaux, `|λ|! / hook product`.
    pub fn dimension(&self) -> BigInt {
        crate::rational::factorial(self.size()) / self.hook_product()
    }

    /// Dominance order `self >= other`, for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut s, mut t) = (0u32, 0u32);
        for i in 1..=n {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return false;
            }
        }
        self.size() == other.size()
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, by size.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// `λ ∪ (k)`.
    pub fn with_part(&self, k: u32) -> Partition {
        let mut parts = self.0.clone();
        let pos = parts.iter().position(|&p| p < k).unwrap_or(parts.len());
        parts.insert(pos, k);
        Partition(parts)
    }

    /// Removes one occurrence of `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            if i == 0 || self.0[i - 1] > cur {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// `2λ = (2λ_1, 2λ_2, ...)`.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }
}

fn fill(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for k in (1..=max.min(n)).rev() {
        cur.push(k);
        fill(n - k, k, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    /// By size, then lexicographically by parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = AlgebraError;
    fn try_from(v: Vec<u32>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `"[3,1,1]"`, `"3,1,1"` or `"[]"`.
impl FromStr for Partition {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> = inner.split(',').map(|t| t.trim().parse::<u32>()).collect();
        Partition::new(parts.map_err(|e| AlgebraError::InvalidPartition(format!("{s}: {e}")))?)
    }
}

#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::partition::Partition::new(vec![$($x),+]).expect("valid partition literal") };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3), vec![part![3], part![2, 1], part![1, 1, 1]]);
    }

    #[test]
    fn derived_data() {
        let l = part![3, 1, 1];
        assert_eq!(l.conjugate(), part![3, 1, 1]);
        assert_eq!(part![4, 2].conjugate(), part![2, 2, 1, 1]);
        assert_eq!(part![2, 1].z(), BigInt::from(2));
        assert_eq!(part![1, 1, 1].z(), BigInt::from(6));
        assert_eq!(l.hook_product(), BigInt::from(20));
        assert_eq!(l.dimension(), BigInt::from(6));
        assert_eq!(l.arm(1, 1), 2);
        assert_eq!(l.leg(1, 1), 2);
    }

    #[test]
    fn dominance() {
        assert!(part![3, 1].dominates(&part![2, 2]));
        assert!(!part![3, 1, 1, 1].dominates(&part![2, 2, 2]));
        assert!(!part![2, 2, 2].dominates(&part![3, 1, 1, 1]));
    }

    #[test]
    fn editing() {
        assert_eq!(part![3, 1].with_part(2), part![3, 2, 1]);
        assert_eq!(part![3, 2, 1].without_part(2), Some(part![3, 1]));
        assert_eq!(part![2, 1].union(&part![3, 1]), part![3, 2, 1, 1]);
        assert_eq!(part![2].add_box(), vec![part![3], part![2, 1]]);
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), l());
        assert!("[1,2]".parse::<Partition>().is_err());
        fn l() -> Partition {
            part![3, 1, 1]
        }
    }
}
