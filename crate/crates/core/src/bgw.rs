//! Series expansions of the orthogonal and unitary BGW integrals: Pfaffian
//! and determinant formulas in modified Bessel functions, compared with the
//! specializations of `τ`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use monohurwitz_algebra::{int, BigRat, Field, Partition};
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{CoreError, Result};
use crate::linalg::determinant_expansion;
use crate::ortho::a_coeff_def;
use crate::pfaffian::{a_kernel, a_pfaffian, pfaffian, SkewMatrix};
use crate::powerseries::PowerSeries;
use crate::report::{CheckReport, Checker};
use crate::symmetric::JackTable;
use crate::tau::zonal_table;

type Series = PowerSeries<BigRat>;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn fact_rat(n: u32) -> BigRat {
    BigRat::from_integer(factorial(n))
}

/// Coefficients `c_{k,l}` of `M(t; x, y) = Σ c_{k,l} t^{k+l} x^k y^l`.
pub type Kernel = BTreeMap<(u32, u32), BigRat>;

/// `M(t; x, y) = Σ_{k,l>=0} t^{k+l} x^k a_{k,l} y^l` through `t^{t_max}`.
pub fn bgw_kernel(t_max: u32) -> Kernel {
    let mut m = Kernel::new();
    for k in 0..=t_max {
        for l in 0..=t_max - k {
            let a = a_kernel(k as i64, l as i64);
            if !Field::is_zero(&a) {
                m.insert((k, l), a);
            }
        }
    }
    m
}

/// `Σ_{k>=1} t^k (x^k - y^k)/(2 k!^2) + Σ_{k,l>=1} t^{k+l} (k-l)/(4(k+l)) x^k y^l/(k!^2 l!^2)`.
pub fn bgw_kernel_explicit(t_max: u32) -> Kernel {
    let mut m = Kernel::new();
    let mut put = |key, v: BigRat| {
        let e = m.entry(key).or_insert_with(|| int(0));
        *e += v;
    };
    for k in 1..=t_max {
        let c = (fact_rat(k) * fact_rat(k) * int(2)).recip();
        put((k, 0), c.clone());
        put((0, k), -c);
        for l in 1..=t_max - k {
            let v = BigRat::new((k as i64 - l as i64).into(), (4 * (k + l)).into())
                / (fact_rat(k) * fact_rat(k) * fact_rat(l) * fact_rat(l));
            put((k, l), v);
        }
    }
    m.retain(|_, v| !Field::is_zero(v));
    m
}

/// `c ∫_0^t dt'/√t' (√x I_1(2√(t'x))(1 + I_0(2√(t'y))) - (x <-> y))`,
/// using `√x I_1(2√(t'x))/√t' = Σ_l t'^l x^{l+1}/(l!(l+1)!)`. The kernel is
/// the case `c = 1/4`.
pub fn bgw_kernel_bessel(t_max: u32, c: &BigRat) -> Kernel {
    let mut m = Kernel::new();
    // 1 + I_0(2√(t'y)) = Σ_j e_j (t'y)^j with e_0 = 2.
    let e = |j: u32| if j == 0 { int(2) } else { (fact_rat(j) * fact_rat(j)).recip() };
    for l in 0..t_max {
        let i1 = (fact_rat(l) * fact_rat(l + 1)).recip();
        for j in 0..t_max - l {
            // t'^{l+j} integrates to t^{l+j+1}/(l+j+1).
            let v = &i1 * e(j) * c / int((l + j + 1) as i64);
            for (key, sign) in [((l + 1, j), 1), ((j, l + 1), -1)] {
                let entry = m.entry(key).or_insert_with(|| int(0));
                *entry += &v * int(sign);
            }
        }
    }
    m.retain(|_, v| !Field::is_zero(v));
    m
}

/// The three descriptions of the kernel agree through `t^{t_max}`, and the
/// kernel is antisymmetric.
pub fn check_kernel(t_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("BGW kernel", "sum t^{k+l} x^k a_kl y^l = explicit sums = Bessel integral").param("t_max", t_max);
    let (a, e, b) = (bgw_kernel(t_max), bgw_kernel_explicit(t_max), bgw_kernel_bessel(t_max, &BigRat::new(1.into(), 4.into())));
    let keys: std::collections::BTreeSet<_> = a.keys().chain(e.keys()).chain(b.keys()).copied().collect();
    let get = |m: &Kernel, k| m.get(&k).cloned().unwrap_or_else(|| int(0));
    for (k, l) in keys {
        let mono = format!("x^{k} y^{l}");
        ch.compare(k + l, &mono, &get(&a, (k, l)), &get(&e, (k, l)));
        ch.compare(k + l, &mono, &get(&a, (k, l)), &get(&b, (k, l)));
        ch.compare(k + l, format!("{mono} antisymmetry"), &get(&a, (k, l)), &-get(&a, (l, k)));
    }
    Ok(ch.finish())
}

fn kernel_series(m: &Kernel, x: &BigRat, y: &BigRat, prec: u32) -> Series {
    let mut c = vec![int(0); prec as usize + 1];
    for (&(k, l), a) in m {
        if k + l <= prec {
            c[(k + l) as usize] += a * Field::pow(x, k) * Field::pow(y, l);
        }
    }
    PowerSeries::new(c, prec)
}

/// The border entry of the odd case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BorderEntry {
    /// `Σ_{k>=0} a_{k,-1} (tx)^k = (1 + I_0(2√(tx)))/2`.
    #[default]
    OnePlusI0Half,
    /// `I_0(2√(tx))/2`.
    AsPrinted,
}

fn border_series(x: &BigRat, border: BorderEntry, prec: u32) -> Series {
    let mut c: Vec<BigRat> = (0..=prec).map(|k| Field::pow(x, k) / (fact_rat(k) * fact_rat(k) * int(2))).collect();
    if border == BorderEntry::OnePlusI0Half {
        c[0] += BigRat::new(1.into(), 2.into());
    }
    PowerSeries::new(c, prec)
}

fn vandermonde(x: &[BigRat]) -> Result<BigRat> {
    let mut v = <BigRat as One>::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let d = &x[i] - &x[j];
            if Field::is_zero(&d) {
                return Err(CoreError::DegenerateSpectrum(format!("x_{} = x_{} = {}", i + 1, j + 1, x[i])));
            }
            v *= d;
        }
    }
    Ok(v)
}

/// Divides by `t^shift`, which must leave a power series.
fn drop_low_powers(s: &Series, shift: u32, t_max: u32) -> Result<Vec<BigRat>> {
    for k in 0..shift {
        if !Field::is_zero(&s.coeff(k)) {
            return Err(CoreError::NonCancellingPole { power: shift, degree: k });
        }
    }
    Ok((0..=t_max).map(|k| s.coeff(k + shift)).collect())
}

/// `∏_{k=1}^{n-1}(2k)! Pf(M) / (t^{n(n-1)/2} Δ(x))` through `t^{t_max}`: the
/// orthogonal BGW integral over `O(2n)` whose matrix argument has spectrum
/// `x_1, x_1, ..., x_n, x_n`.
pub fn bgw_orthogonal(x: &[BigRat], t_max: u32, border: BorderEntry) -> Result<Vec<BigRat>> {
    let n = x.len();
    if n == 0 {
        return Err(CoreError::Config("empty spectrum".into()));
    }
    let delta = vandermonde(x)?;
    let shift = (n * (n - 1) / 2) as u32;
    let prec = t_max + shift;
    let kernel = bgw_kernel(prec);
    let size = n + n % 2;
    let m = SkewMatrix::from_upper(size, |i, j| {
        if j < n {
            kernel_series(&kernel, &x[i], &x[j], prec)
        } else {
            border_series(&x[i], border, prec)
        }
    });
    let pf = pfaffian(&m)?.with_precision(prec);
    let pre = (1..n as u32).fold(BigInt::one(), |acc, k| acc * factorial(2 * k));
    let scale = BigRat::from_integer(pre) / delta;
    Ok(drop_low_powers(&pf, shift, t_max)?.into_iter().map(|c| c * &scale).collect())
}

fn power_sums(x: &[BigRat], mult: i64) -> impl Fn(u32) -> BigRat + '_ {
    move |r| x.iter().fold(int(0), |acc, xi| acc + Field::pow(xi, r)) * int(mult)
}

/// `τ_{b=1}(t; p, u)` at `u^{-1} = 2n` and `p_i = 2 Σ_j x_j^i`, from the
/// zonal expansion; zonal polynomials with more than `2n` rows vanish on the
/// doubled spectrum and are dropped.
pub fn bgw_tau_side(x: &[BigRat], t_max: u32) -> Result<Vec<BigRat>> {
    let table = zonal_table();
    let n = x.len();
    let big_n = int(2 * n as i64);
    let p = power_sums(x, 2);
    let mut out = Vec::with_capacity(t_max as usize + 1);
    for m in 0..=t_max {
        let mut acc = int(0);
        for lambda in Partition::all(m).into_iter().filter(|l| l.len() <= 2 * n) {
            let mut w = table.hooks(&lambda).j.inv()?;
            for (r, c) in lambda.boxes() {
                w = w.mul(&crate::tau::weight_n(table.b(), &big_n, r, c)?);
            }
            acc += table.jack(&lambda)?.eval_p(&p) * w;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Schur functions in finitely many variables by the bialternant formula.
pub fn schur_bialternant(lambda: &Partition, x: &[BigRat]) -> Result<BigRat> {
    let n = x.len();
    if lambda.len() > n {
        return Ok(int(0));
    }
    let num: Vec<Vec<BigRat>> = x.iter().map(|xi| (1..=n).map(|j| Field::pow(xi, lambda.part(j) + (n - j) as u32)).collect()).collect();
    Ok(determinant_expansion(&num) / vandermonde(x)?)
}

/// `Σ_{ℓ(λ)<=n} t^{|λ|} a_λ(n) s_λ(x)`, with `a_λ(n)` as a Pfaffian.
pub fn bgw_schur_side(x: &[BigRat], t_max: u32) -> Result<Vec<BigRat>> {
    let n = x.len();
    (0..=t_max)
        .map(|m| {
            let mut acc = int(0);
            for lambda in Partition::all(m).into_iter().filter(|l| l.len() <= n) {
                acc += a_pfaffian(&lambda, n)? * schur_bialternant(&lambda, x)?;
            }
            Ok(acc)
        })
        .collect()
}

/// `(tx)^{j/2} I_j(2√(tx)) = Σ_l (tx)^{l+j}/(l!(l+j)!)`.
pub fn bessel_series(j: u32, x: &BigRat, prec: u32) -> Series {
    let c = (0..=prec)
        .map(|k| if k < j { int(0) } else { Field::pow(x, k) / (fact_rat(k - j) * fact_rat(k)) })
        .collect();
    PowerSeries::new(c, prec)
}

/// `∏_{k=1}^{n-1} k! det((tx_i)^{(n-j)/2} I_{n-j}(2√(tx_i))) / (t^{n(n-1)/2} Δ(x))`.
pub fn bgw_unitary(x: &[BigRat], t_max: u32) -> Result<Vec<BigRat>> {
    let n = x.len();
    let delta = vandermonde(x)?;
    let shift = (n * n.saturating_sub(1) / 2) as u32;
    let prec = t_max + shift;
    let m: Vec<Vec<Series>> = x.iter().map(|xi| (1..=n).map(|j| bessel_series((n - j) as u32, xi, prec)).collect()).collect();
    let det = determinant_expansion(&m).with_precision(prec);
    let pre = (1..n as u32).fold(BigInt::one(), |acc, k| acc * factorial(k));
    let scale = BigRat::from_integer(pre) / delta;
    Ok(drop_low_powers(&det, shift, t_max)?.into_iter().map(|c| c * &scale).collect())
}

fn b_zero_table() -> &'static JackTable<BigRat> {
    static TABLE: OnceLock<JackTable<BigRat>> = OnceLock::new();
    TABLE.get_or_init(|| JackTable::new(int(0)))
}

/// `Trunc(τ_{b=0}, n)` at `u = 1/n` and `p_i = Σ_j x_j^i`.
pub fn bgw_unitary_tau_side(x: &[BigRat], t_max: u32) -> Result<Vec<BigRat>> {
    let table = b_zero_table();
    let n = x.len();
    let big_n = int(n as i64);
    let p = power_sums(x, 1);
    (0..=t_max)
        .map(|m| {
            let mut acc = int(0);
            for lambda in Partition::all(m).into_iter().filter(|l| l.len() <= n) {
                let mut w = table.hooks(&lambda).j.inv()?;
                for (r, c) in lambda.boxes() {
                    w = w.mul(&crate::tau::weight_n(table.b(), &big_n, r, c)?);
                }
                acc += table.jack(&lambda)?.eval_p(&p) * w;
            }
            Ok(acc)
        })
        .collect()
}

fn compare_series(ch: &mut Checker, label: &str, expected: &[BigRat], got: &[BigRat]) {
    for (k, (e, g)) in expected.iter().zip(got).enumerate() {
        ch.compare(k as u32, format!("{label} t^{k}"), e, g);
    }
}

fn spectrum_label(x: &[BigRat]) -> String {
    x.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// The Pfaffian formula against the zonal specialization and the Schur
/// route, through `t^{t_max}`.
pub fn check_bgw_orthogonal(x: &[BigRat], t_max: u32, border: BorderEntry) -> Result<CheckReport> {
    let mut ch = Checker::new("orthogonal BGW", "prod (2k)! Pf(M)/(t^{n(n-1)/2} Delta) = tau_{b=1}(t; p(XX^t), 1/(2n))")
        .param("x", spectrum_label(x))
        .param("t_max", t_max)
        .param("border", format!("{border:?}"));
    let tau = bgw_tau_side(x, t_max)?;
    match bgw_orthogonal(x, t_max, border) {
        Ok(pf) => compare_series(&mut ch, "pfaffian", &tau, &pf),
        Err(CoreError::NonCancellingPole { power, degree }) => {
            ch.fail(degree, format!("t^{degree}"), "0 below the Vandermonde power", format!("nonzero, t^{power} does not divide"));
        }
        Err(e) => return Err(e),
    }
    compare_series(&mut ch, "schur", &tau, &bgw_schur_side(x, t_max)?);
    Ok(ch.finish())
}

/// The unitary determinant formula against `Trunc(τ_{b=0}, n)` at `u = 1/n`.
pub fn check_bgw_unitary(x: &[BigRat], t_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("unitary BGW", "prod k! det(Bessel)/(t^{n(n-1)/2} Delta) = Trunc(tau_{b=0}, n)(t; p(XX^+), 1/n)")
        .param("x", spectrum_label(x))
        .param("t_max", t_max);
    compare_series(&mut ch, "determinant", &bgw_unitary_tau_side(x, t_max)?, &bgw_unitary(x, t_max)?);
    Ok(ch.finish())
}

/// `Trunc(τ(N), n)` of the BKP normalization, at `N = n` and `p_i = Σ x_j^i`,
/// equals the orthogonal tau side.
pub fn check_bgw_trunc_bridge(x: &[BigRat], t_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("truncation bridge", "Trunc(tau(N), n) at N = n, p = p(x) equals BGW over O(2n)")
        .param("x", spectrum_label(x))
        .param("t_max", t_max);
    let n = x.len();
    let tau = crate::bkp::bkp_tau(t_max)?;
    let p = power_sums(x, 1);
    let at = [(monohurwitz_algebra::Var::N, int(n as i64))];
    let mut got = Vec::new();
    for m in 0..=t_max {
        let truncated = crate::bkp::trunc(tau.slice(m), n);
        got.push(truncated.try_map(|c| c.eval(&at))?.eval_p(&p));
    }
    compare_series(&mut ch, "trunc", &bgw_tau_side(x, t_max)?, &got);
    // The coefficients themselves: a_λ(n) on every retained λ.
    for lambda in Partition::all_up_to(t_max).into_iter().filter(|l| l.len() <= n) {
        let expected = a_coeff_def(&lambda)?.eval(&at)?;
        ch.compare(lambda.size(), format!("a_{lambda}({n})"), &expected, &a_pfaffian(&lambda, n)?);
    }
    Ok(ch.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::rat;

    #[test]
    fn kernel_low_orders() {
        let m = bgw_kernel(2);
        assert_eq!(m[&(1, 0)], rat(1, 2));
        assert_eq!(m[&(0, 1)], rat(-1, 2));
        assert_eq!(m[&(2, 0)], rat(1, 8));
        assert!(!m.contains_key(&(1, 1)));
    }

    #[test]
    fn rank_one_series() {
        let s = bgw_orthogonal(&[int(1)], 3, BorderEntry::OnePlusI0Half).unwrap();
        assert_eq!(s, vec![int(1), rat(1, 2), rat(1, 8), rat(1, 72)]);
        let printed = bgw_orthogonal(&[int(1)], 1, BorderEntry::AsPrinted).unwrap();
        assert_eq!(printed[0], rat(1, 2));
        assert_eq!(bgw_tau_side(&[int(1)], 1).unwrap(), vec![int(1), rat(1, 2)]);
        assert_eq!(bgw_unitary(&[int(3)], 1).unwrap(), vec![int(1), int(3)]);
    }

    #[test]
    fn repeated_eigenvalues_are_rejected() {
        let r = bgw_orthogonal(&[int(1), int(1)], 2, BorderEntry::default());
        assert!(matches!(r, Err(CoreError::DegenerateSpectrum(_))));
    }
}
