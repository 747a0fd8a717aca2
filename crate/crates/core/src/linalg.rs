//! Small dense linear algebra over an exact field.

use std::collections::HashMap;

use monohurwitz_algebra::Field;

use crate::error::{CoreError, Result};

pub type Matrix<C> = Vec<Vec<C>>;

pub fn identity<C: Field>(n: usize) -> Matrix<C> {
    (0..n).map(|i| (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect()).collect()
}

pub fn mat_mul<C: Field>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch in matrix product");
            (0..cols)
                .map(|j| {
                    let mut acc = C::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&x.mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose<C: Field>(a: &Matrix<C>) -> Matrix<C> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Determinant by Gaussian elimination.
pub fn determinant<C: Field>(a: &Matrix<C>) -> C {
    let n = a.len();
    let mut m = a.clone();
    let mut det = C::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return C::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = det.neg();
        }
        let p = m[col][col].clone();
        det = det.mul(&p);
        let p_inv = p.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&p_inv);
            for c in col..n {
                if !m[col][c].is_zero() {
                    let v = m[r][c].sub(&f.mul(&m[col][c]));
                    m[r][c] = v;
                }
            }
        }
    }
    det
}

/// Determinant by Laplace expansion along the first row, memoized on the
/// remaining columns; uses no division, so it applies over rings such as
/// truncated power series.
pub fn determinant_expansion<C: Field>(a: &Matrix<C>) -> C {
    let n = a.len();
    assert!(n < 32, "matrix too large for expansion");
    let mut memo: HashMap<u32, C> = HashMap::new();
    laplace(a, 0, (1u32 << n) - 1, &mut memo)
}

fn laplace<C: Field>(a: &Matrix<C>, row: usize, cols: u32, memo: &mut HashMap<u32, C>) -> C {
    if cols == 0 {
        return C::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = C::zero();
    let mut pos = 0;
    for j in 0..a.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !a[row][j].is_zero() {
            let minor = laplace(a, row + 1, cols & !(1 << j), memo);
            let term = a[row][j].mul(&minor);
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Solves `a x = rhs` for square invertible `a`.
pub fn solve<C: Field>(a: &Matrix<C>, rhs: &[C], what: &str) -> Result<Vec<C>> {
    let n = a.len();
    let mut m: Matrix<C> = a.iter().zip(rhs).map(|(row, r)| row.iter().cloned().chain([r.clone()]).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).ok_or_else(|| CoreError::SingularSystem(what.to_string()))?;
        m.swap(piv, col);
        let p_inv = m[col][col].inv()?;
        for c in col..=n {
            m[col][c] = m[col][c].mul(&p_inv);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=n {
                if !m[col][c].is_zero() {
                    let v = m[r][c].sub(&f.mul(&m[col][c]));
                    m[r][c] = v;
                }
            }
        }
    }
    Ok(m.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::{int, BigRat};

    fn m(rows: &[&[i64]]) -> Matrix<BigRat> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinant_and_solve() {
        let a = m(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        assert_eq!(determinant(&a), int(-5));
        assert_eq!(determinant_expansion(&a), int(-5));
        let x = solve(&a, &[int(3), int(2), int(4)], "test").unwrap();
        assert_eq!(x, vec![int(1), int(1), int(1)]);
        assert_eq!(determinant(&mat_mul(&a, &identity(3))), int(-5));
        assert_eq!(transpose(&transpose(&a)), a);
    }

    #[test]
    fn singular_systems_are_reported() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&a), int(0));
        assert!(matches!(solve(&a, &[int(1), int(1)], "s"), Err(CoreError::SingularSystem(_))));
    }
}
