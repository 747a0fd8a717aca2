//! Brute-force enumeration of monotone transposition factorizations, the
//! orientable (`b = 0`) case of monotone Hurwitz maps.

use std::collections::BTreeMap;

use monohurwitz_algebra::{Field, Partition, RatFun};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::report::{CheckReport, Checker};
use crate::tau::{expand_tau_symbolic, rescale_tilde, tau_at_b_zero, u_expansion, Param};

/// Largest `n` and `r` accepted by [`enumerate`].
pub const MAX_VERTICES: u32 = 6;
pub const MAX_TRANSPOSITIONS: u32 = 6;

fn cycle_type(perm: &[u8]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_parts(parts)
}

fn extend(perm: &mut Vec<u8>, remaining: u32, min_b: usize, hist: &mut BTreeMap<Partition, u64>) {
    if remaining == 0 {
        *hist.entry(cycle_type(perm)).or_insert(0) += 1;
        return;
    }
    for b in min_b..perm.len() {
        for a in 0..b {
            // Right multiplication by (a b) swaps the images of a and b.
            perm.swap(a, b);
            extend(perm, remaining - 1, b, hist);
            perm.swap(a, b);
        }
    }
}

/// For each cycle type `λ ⊢ n`, the number of sequences of `r`
/// transpositions `(a_i b_i)`, `a_i < b_i <= n`, with `b_1 <= ... <= b_r`
/// whose product has cycle type `λ`.
pub fn enumerate(n: u32, r: u32) -> Result<BTreeMap<Partition, u64>> {
    if n > MAX_VERTICES || r > MAX_TRANSPOSITIONS {
        return Err(CoreError::BudgetExceeded(format!(
            "n={n}, r={r} exceeds n <= {MAX_VERTICES}, r <= {MAX_TRANSPOSITIONS}"
        )));
    }
    if r == 0 || n < 2 {
        let mut h = BTreeMap::new();
        if r == 0 {
            h.insert(Partition::from_parts(vec![1; n as usize]), 1);
        }
        return Ok(h);
    }
    // Split on the first transposition to spread the work.
    let firsts: Vec<(usize, usize)> = (1..n as usize).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let parts: Vec<BTreeMap<Partition, u64>> = firsts
        .par_iter()
        .map(|&(a, b)| {
            let mut perm: Vec<u8> = (0..n as u8).collect();
            perm.swap(a, b);
            let mut hist = BTreeMap::new();
            extend(&mut perm, r - 1, b, &mut hist);
            hist
        })
        .collect();
    let mut total = BTreeMap::new();
    for h in parts {
        for (k, v) in h {
            *total.entry(k).or_insert(0) += v;
        }
    }
    Ok(total)
}

/// `h_r(1, 2, ..., n-1)`, the number of monotone sequences of length `r`.
pub fn sequence_count(n: u32, r: u32) -> BigInt {
    // h_r(x_1..x_m) = h_r(x_1..x_{m-1}) + x_m h_{r-1}(x_1..x_m)
    let mut h = vec![BigInt::one(); 1];
    h.extend((1..=r).map(|_| BigInt::from(0)));
    for x in 1..n {
        for k in 1..=r as usize {
            let prev = h[k - 1].clone();
            h[k] += prev * x;
        }
    }
    h[r as usize].clone()
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// `n! [t^n u^r p_λ] τ̃ |_{b=0}` against [`enumerate`] for `n <= n_max`,
/// `r <= r_max`.
pub fn check_against_tau(n_max: u32, r_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("monotone oracle", "n! [t^n u^r p_lambda] tau~|_{b=0} = #monotone factorizations")
        .param("n_max", n_max)
        .param("r_max", r_max);
    let tilde = tau_at_b_zero(&rescale_tilde(&expand_tau_symbolic(n_max, Param::U)?)?)?;
    let series = u_expansion(&tilde, r_max)?;
    for n in 0..=n_max {
        for r in 0..=r_max {
            let counts = enumerate(n, r)?;
            for lambda in Partition::all(n) {
                let got = series.slice(n).coeff(&lambda).coeff(r).mul_int(factorial(n));
                let expected = RatFun::from_int(*counts.get(&lambda).unwrap_or(&0) as i64);
                ch.compare(n, format!("u^{r} p{lambda}"), &expected, &got);
            }
        }
    }
    Ok(ch.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::part;

    #[test]
    fn small_cases() {
        assert_eq!(enumerate(2, 1).unwrap(), BTreeMap::from([(part![2], 1)]));
        assert_eq!(enumerate(2, 2).unwrap(), BTreeMap::from([(part![1, 1], 1)]));
        assert_eq!(enumerate(3, 1).unwrap(), BTreeMap::from([(part![2, 1], 3)]));
        assert_eq!(enumerate(3, 0).unwrap(), BTreeMap::from([(part![1, 1, 1], 1)]));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(enumerate(7, 1), Err(CoreError::BudgetExceeded(_))));
        assert!(matches!(enumerate(3, 7), Err(CoreError::BudgetExceeded(_))));
    }

    #[test]
    fn sequence_counts() {
        assert_eq!(sequence_count(3, 2), BigInt::from(1 + 2 + 4));
        assert_eq!(sequence_count(2, 5), BigInt::from(1));
    }
}
