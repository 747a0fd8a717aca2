//! Pfaffians of skew-symmetric matrices and the Pfaffian formula for
//! `a_λ(n)`.

use std::collections::HashMap;

use monohurwitz_algebra::{int, BigRat, Field, Partition, Var};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::linalg::{determinant, mat_mul, transpose, Matrix};
use crate::ortho::a_coeff_def;
use crate::report::{CheckReport, Checker};

/// A square matrix with `A[i][j] = -A[j][i]` and zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<C> {
    entries: Matrix<C>,
}

impl<C: Field> SkewMatrix<C> {
    pub fn new(entries: Matrix<C>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(CoreError::NotSkew(i, row.len()));
            }
            for j in i..n {
                if row[j] != entries[j][i].neg() {
                    return Err(CoreError::NotSkew(i, j));
                }
            }
        }
        Ok(SkewMatrix { entries })
    }

    /// Builds the matrix from its strict upper triangle `f(i, j)`, `i < j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut entries = vec![vec![C::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                entries[j][i] = v.neg();
                entries[i][j] = v;
            }
        }
        SkewMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &Matrix<C> {
        &self.entries
    }

    /// The principal submatrix on the given indices, in order.
    pub fn principal(&self, idx: &[usize]) -> Self {
        SkewMatrix { entries: idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect()).collect() }
    }
}

/// `Pf(A)` by expansion along the lowest remaining index, memoized on the
/// set of remaining indices.
pub fn pfaffian<C: Field>(a: &SkewMatrix<C>) -> Result<C> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(CoreError::OddSize(n));
    }
    assert!(n < 32, "matrix too large for subset memoization");
    let mut memo = HashMap::new();
    Ok(pf_rec(&a.entries, (1u32 << n) - 1, &mut memo))
}

fn pf_rec<C: Field>(a: &Matrix<C>, mask: u32, memo: &mut HashMap<u32, C>) -> C {
    if mask == 0 {
        return C::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    let mut acc = C::zero();
    let mut pos = 0;
    for j in i + 1..a.len() {
        if rest & (1 << j) == 0 {
            continue;
        }
        if !a[i][j].is_zero() {
            let term = a[i][j].mul(&pf_rec(a, rest & !(1 << j), memo));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// `(x_i - x_j)/(x_i + x_j)` for `i < j`, equal to `1` when `x_i = x_j = 0`.
fn schur_entry(xi: &BigRat, xj: &BigRat, i: usize, j: usize) -> Result<BigRat> {
    let s = xi + xj;
    if !Field::is_zero(&s) {
        Ok((xi - xj) / s)
    } else if Field::is_zero(xi) {
        Ok(int(1))
    } else {
        Err(CoreError::Config(format!("x_{} + x_{} = 0", i + 1, j + 1)))
    }
}

/// The matrix `x_ij = (x_i - x_j)/(x_i + x_j)`, padded with `x_{n+1} = 0`
/// for odd `n`, completed antisymmetrically where `x_i = x_j = 0`.
pub fn schur_pfaffian_matrix(x: &[BigRat]) -> Result<SkewMatrix<BigRat>> {
    let mut xs = x.to_vec();
    if xs.len() % 2 == 1 {
        xs.push(int(0));
    }
    let n = xs.len();
    let mut entries = vec![vec![int(0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = schur_entry(&xs[i], &xs[j], i, j)?;
            entries[j][i] = -v.clone();
            entries[i][j] = v;
        }
    }
    SkewMatrix::new(entries)
}

/// `∏_{i<j} (x_i - x_j)/(x_i + x_j) = Pf(x_ij)`.
pub fn check_schur_pfaffian(x: &[BigRat]) -> Result<CheckReport> {
    let label = x.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let mut ch = Checker::new("Schur Pfaffian", "prod_{i<j} (x_i-x_j)/(x_i+x_j) = Pf(x_ij)").param("x", &label);
    let mut prod = <BigRat as One>::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            prod *= schur_entry(&x[i], &x[j], i, j)?;
        }
    }
    let pf = pfaffian(&schur_pfaffian_matrix(x)?)?;
    ch.compare(x.len() as u32, &label, &prod, &pf);
    Ok(ch.finish())
}

/// The Schur Pfaffian identity on `count` random tuples of distinct
/// positive rationals of length `1..=max_len`.
pub fn check_schur_pfaffian_random(count: usize, max_len: usize, seed: u64) -> Result<CheckReport> {
    let mut ch = Checker::new("Schur Pfaffian", "prod_{i<j} (x_i-x_j)/(x_i+x_j) = Pf(x_ij)")
        .param("count", count)
        .param("max_len", max_len)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let len = rng.gen_range(1..=max_len);
        let mut x: Vec<BigRat> = Vec::with_capacity(len);
        while x.len() < len {
            let v = BigRat::new(rng.gen_range(1i64..=30).into(), rng.gen_range(1i64..=7).into());
            if !x.contains(&v) {
                x.push(v);
            }
        }
        let r = check_schur_pfaffian(&x)?;
        match r.witness {
            Some(w) => ch.fail(w.degree, w.monomial, w.expected, w.got),
            None => {
                ch.compare(len as u32, r.params["x"].clone(), &0, &0);
            }
        }
    }
    Ok(ch.finish())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// `Σ_{|I|=n} det(B[:,I]) Pf(A[I,I]) = Pf(B A Bᵀ)` for an `n × N` matrix `B`.
pub fn check_minor_summation(b: &Matrix<BigRat>, a: &SkewMatrix<BigRat>) -> Result<CheckReport> {
    let (n, big) = (b.len(), a.size());
    let mut ch = Checker::new("minor summation", "sum_I det(B_I) Pf(A_II) = Pf(B A B^t)").param("n", n).param("N", big);
    if n % 2 == 1 {
        return Err(CoreError::OddSize(n));
    }
    let mut lhs = int(0);
    for idx in subsets(big, n) {
        let minor: Matrix<BigRat> = b.iter().map(|row| idx.iter().map(|&j| row[j].clone()).collect()).collect();
        lhs += determinant(&minor) * pfaffian(&a.principal(&idx))?;
    }
    let bab = mat_mul(&mat_mul(b, a.entries()), &transpose(b));
    let rhs = pfaffian(&SkewMatrix::new(bab)?)?;
    ch.compare(n as u32, format!("{n}x{big}"), &rhs, &lhs);
    Ok(ch.finish())
}

fn random_entry(rng: &mut ChaCha8Rng) -> BigRat {
    BigRat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
}

pub fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> SkewMatrix<BigRat> {
    SkewMatrix::from_upper(n, |_, _| random_entry(rng))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<BigRat> {
    (0..rows).map(|_| (0..cols).map(|_| random_entry(rng)).collect()).collect()
}

/// `Pf(A)^2 = det(A)` and `Pf(B A Bᵀ) = det(B) Pf(A)` on random instances of
/// even size at most `max_size`, plus the rectangular minor sums.
pub fn check_random_pfaffians(count: usize, max_size: usize, seed: u64) -> Result<CheckReport> {
    let mut ch = Checker::new("Pfaffian identities", "Pf(A)^2 = det(A), Pf(BAB^t) = det(B) Pf(A)")
        .param("count", count)
        .param("max_size", max_size)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..count {
        let n = 2 * rng.gen_range(1..=max_size / 2);
        let a = random_skew(&mut rng, n);
        let pf = pfaffian(&a)?;
        ch.compare(n as u32, format!("square #{t}"), &determinant(a.entries()), &(&pf * &pf));
        let b = random_matrix(&mut rng, n, n);
        let bab = SkewMatrix::new(mat_mul(&mat_mul(&b, a.entries()), &transpose(&b)))?;
        ch.compare(n as u32, format!("congruence #{t}"), &(determinant(&b) * &pf), &pfaffian(&bab)?);
    }
    for (n, big) in [(2, 4), (2, 5), (4, 5), (4, 6)] {
        let b = random_matrix(&mut rng, n, big);
        let a = random_skew(&mut rng, big);
        let r = check_minor_summation(&b, &a)?;
        if let Some(w) = r.witness {
            ch.fail(w.degree, w.monomial, w.expected, w.got);
        } else {
            ch.compare(n as u32, format!("{n}x{big}"), &0, &0);
        }
    }
    Ok(ch.finish())
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn fact_sq(i: i64) -> BigRat {
    let f = factorial(i);
    BigRat::from_integer(&f * &f)
}

/// The kernel `a_{i,j}` for `i, j >= -1`.
pub fn a_kernel(i: i64, j: i64) -> BigRat {
    assert!(i >= -1 && j >= -1, "kernel index below -1: ({i}, {j})");
    match (i, j) {
        _ if i == j => int(0),
        (i, j) if i >= 1 && j >= 1 => BigRat::from_integer((i - j).into()) / (fact_sq(i) * fact_sq(j) * int(4 * (i + j))),
        (i, _) if i >= 1 => (fact_sq(i) * int(2)).recip(),
        (_, j) if j >= 1 => -a_kernel(j, i),
        (0, -1) => int(1),
        _ => int(-1),
    }
}

/// `∏_{k=1}^{n-1} (2k)! · Pf(a_{x_i, x_j})` with `x_i = λ_i + n - i`, over
/// `n + 1` indices when `n` is odd.
pub fn a_pfaffian(lambda: &Partition, n: usize) -> Result<BigRat> {
    if lambda.len() > n {
        return Err(CoreError::InvalidPadding { lambda: lambda.clone(), k: n });
    }
    let size = n + n % 2;
    let x: Vec<i64> = (1..=size).map(|i| lambda.part(i) as i64 + n as i64 - i as i64).collect();
    let m = SkewMatrix::from_upper(size, |i, j| a_kernel(x[i], x[j]));
    let pre = (1..n as i64).fold(BigInt::one(), |acc, k| acc * factorial(2 * k));
    Ok(pfaffian(&m)? * BigRat::from_integer(pre))
}

/// The Pfaffian formula for `a_λ(n)` against `1/(hook_λ^2 o_λ(1^{2n}))`
/// for `|λ| <= max_size` and `max(ℓ(λ), 1) <= n <= n_max`.
pub fn check_a_pfaffian(max_size: u32, n_max: usize) -> Result<CheckReport> {
    let mut ch = Checker::new("a-coefficient Pfaffian", "a_lambda(n) = prod (2k)! Pf(a_{x_i,x_j})")
        .param("max_size", max_size)
        .param("n_max", n_max);
    for lambda in Partition::all_up_to(max_size) {
        let def = a_coeff_def(&lambda)?;
        for n in lambda.len().max(1)..=n_max {
            let expected = def.eval(&[(Var::N, int(n as i64))])?;
            ch.compare(lambda.size(), format!("{lambda} n={n}"), &expected, &a_pfaffian(&lambda, n)?);
        }
    }
    Ok(ch.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::{part, rat};

    fn skew(upper: &[&[i64]]) -> SkewMatrix<BigRat> {
        SkewMatrix::from_upper(upper.len() + 1, |i, j| int(upper[i][j - i - 1]))
    }

    #[test]
    fn small_pfaffians() {
        assert_eq!(pfaffian(&skew(&[&[7]])).unwrap(), int(7));
        // a12 a34 - a13 a24 + a14 a23
        let a = skew(&[&[2, 3, 5], &[7, 11], &[13]]);
        assert_eq!(pfaffian(&a).unwrap(), int(2 * 13 - 3 * 11 + 5 * 7));
        assert_eq!(pfaffian(&SkewMatrix::<BigRat>::from_upper(0, |_, _| int(0))).unwrap(), int(1));
    }

    #[test]
    fn malformed_matrices_are_rejected() {
        assert!(matches!(pfaffian(&skew(&[&[1, 2], &[3]])), Err(CoreError::OddSize(3))));
        let bad = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert!(matches!(SkewMatrix::new(bad), Err(CoreError::NotSkew(0, 1))));
        let diag = vec![vec![int(1), int(1)], vec![int(-1), int(0)]];
        assert!(matches!(SkewMatrix::new(diag), Err(CoreError::NotSkew(0, 0))));
    }

    #[test]
    fn kernel_values() {
        assert_eq!(a_kernel(0, -1), int(1));
        assert_eq!(a_kernel(-1, 0), int(-1));
        assert_eq!(a_kernel(1, -1), rat(1, 2));
        assert_eq!(a_kernel(0, 2), rat(-1, 8));
        assert_eq!(a_kernel(2, 1), rat(1, 48));
        assert_eq!(a_kernel(1, 2), rat(-1, 48));
    }

    #[test]
    fn small_a_pfaffians() {
        assert_eq!(a_pfaffian(&part![], 1).unwrap(), int(1));
        assert_eq!(a_pfaffian(&part![1], 1).unwrap(), rat(1, 2));
        assert!(matches!(a_pfaffian(&part![1, 1], 1), Err(CoreError::InvalidPadding { .. })));
    }

    #[test]
    fn schur_pfaffian_examples() {
        let r = check_schur_pfaffian(&[int(3), int(1)]).unwrap();
        assert!(r.passed());
        assert_eq!(pfaffian(&schur_pfaffian_matrix(&[int(3), int(1)]).unwrap()).unwrap(), rat(1, 2));
        assert!(check_schur_pfaffian(&[int(5)]).unwrap().passed());
        assert!(check_schur_pfaffian(&[int(3), int(2), int(1)]).unwrap().passed());
        assert!(check_schur_pfaffian(&[int(3), int(0), int(1), int(0)]).unwrap().passed());
    }
}
