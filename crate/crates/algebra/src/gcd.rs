//! Greatest common divisors in `Z[b, u, N]`.
//!
//! Content extraction with respect to a main variable, then the subresultant
//! remainder sequence over the coefficient ring of the remaining variables.

use num_integer::Integer;

use crate::mono::{Var, VarSet};
use crate::poly::MPoly;

/// The gcd with positive integer content and positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone().with_positive_lc();
    }
    if b.is_zero() {
        return a.clone().with_positive_lc();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::constant(a.content().gcd(&b.content()));
    }
    if a == b || *a == -b {
        return a.clone().with_positive_lc();
    }
    let (va, vb) = (a.vars(), b.vars());
    for v in va.union(vb).iter() {
        if va.contains(v) && !vb.contains(v) {
            return gcd_with_coeffs(b, a, v);
        }
        if vb.contains(v) && !va.contains(v) {
            return gcd_with_coeffs(a, b, v);
        }
    }
    // Cheap wins before the remainder sequence.
    if a.len() <= b.len() {
        if let Some(g) = divides_up_to_content(a, b) {
            return g;
        }
    } else if let Some(g) = divides_up_to_content(b, a) {
        return g;
    }
    let v = main_var(a, b, va);
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = subresultant_gcd(&pa, &pb, v);
    (&c * &g).with_positive_lc()
}

/// If `a` divides `b` up to the integer content of `a`, returns the gcd.
fn divides_up_to_content(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let ca = a.content();
    let pa = a.div_int(&ca);
    if b.div_exact(&pa).is_some() {
        let c = ca.gcd(&b.content());
        Some(pa.scale(&c).with_positive_lc())
    } else {
        None
    }
}

/// gcd of `a` with every coefficient of `b` with respect to `v`, where `a`
/// does not involve `v`.
fn gcd_with_coeffs(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let mut coeffs = b.coeffs_in(v);
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.len());
    let mut g = a.clone();
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g.with_positive_lc()
}

/// Content with respect to `v`: gcd of the coefficients of the powers of `v`.
pub fn content_in(a: &MPoly, v: Var) -> MPoly {
    let mut coeffs = a.coeffs_in(v);
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.len());
    let mut g = MPoly::zero();
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g.with_positive_lc()
}

fn main_var(a: &MPoly, b: &MPoly, vars: VarSet) -> Var {
    vars.iter().min_by_key(|&v| a.degree_in(v).max(b.degree_in(v))).expect("non-constant input")
}

type UPoly = Vec<MPoly>;

fn deg(p: &UPoly) -> usize {
    p.len() - 1
}

fn trim(mut p: UPoly) -> UPoly {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn is_zero(p: &UPoly) -> bool {
    p.iter().all(MPoly::is_zero)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let n = deg(b);
    let lcb = &b[n];
    let mut r = a.clone();
    let mut k = deg(&r);
    loop {
        if k < n {
            break;
        }
        let top = r[k].clone();
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        if !top.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                r[k - n + i] = &r[k - n + i] - &(&top * bc);
            }
        }
        debug_assert!(r[k].is_zero());
        r.pop();
        if r.is_empty() {
            r.push(MPoly::zero());
            break;
        }
        if k == 0 {
            break;
        }
        k -= 1;
    }
    trim(r)
}

fn subresultant_gcd(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let mut pa = trim(a.coeffs_in(v));
    let mut pb = trim(b.coeffs_in(v));
    if deg(&pa) < deg(&pb) {
        std::mem::swap(&mut pa, &mut pb);
    }
    if deg(&pb) == 0 {
        return MPoly::one();
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = (deg(&pa) - deg(&pb)) as u32;
        let r = prem(&pa, &pb);
        if is_zero(&r) {
            break;
        }
        if deg(&r) == 0 {
            return MPoly::one();
        }
        let divisor = &g * &h.pow(delta);
        let r: UPoly = r.iter().map(|c| c.div_exact(&divisor).expect("subresultant division")).collect();
        pa = std::mem::replace(&mut pb, r);
        g = pa[deg(&pa)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant h update"),
        };
    }
    let p = MPoly::from_coeffs_in(v, &pb);
    let c = content_in(&p, v);
    p.div_exact(&c).expect("content divides").with_positive_lc()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::mono::Var::{B, N, U};

    fn lin(v: Var, c0: i64, c1: i64) -> MPoly {
        MPoly::linear(v, c0, c1)
    }

    #[test]
    fn integer_and_trivial_cases() {
        assert_eq!(gcd(&MPoly::from_i64(12), &MPoly::from_i64(-18)), MPoly::from_i64(6));
        assert_eq!(gcd(&MPoly::zero(), &lin(B, 1, -1)), lin(B, -1, 1));
        assert_eq!(gcd(&lin(B, 2, 2), &MPoly::from_i64(4)), MPoly::from_i64(2));
    }

    #[test]
    fn shared_factors_are_found() {
        let f1 = lin(B, 1, 1);
        let f2 = &lin(U, 1, 3) + &MPoly::var(B);
        let f3 = lin(N, -2, 1);
        let a = &(&f1 * &f2) * &f3.pow(2);
        let b = &(&f2 * &f3) * &lin(U, 5, -1).scale(&BigInt::from(3));
        let g = gcd(&a, &b);
        assert_eq!(g, (&f2 * &f3).with_positive_lc());
        assert_eq!(gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4))), (&f2 * &f3).scale(&BigInt::from(6)).with_positive_lc());
    }

    #[test]
    fn coprime_bivariate() {
        let a = &(&MPoly::var(B) * &MPoly::var(U)) + &MPoly::one();
        let b = &MPoly::var(B) + &MPoly::var(U);
        assert!(gcd(&a, &b).is_one());
    }
}
