//! The formal-`N` BKP structure of `τ` at `b = 1`: the normalization `β_N`,
//! truncations of Schur expansions, and the first BKP equation.

use std::collections::BTreeMap;

use monohurwitz_algebra::{int, rat, BigRat, Field, GradedSeries, Partition, RatFun, SymFun, Var};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::Result;
use crate::ortho::a_coeff_def;
use crate::report::{CheckReport, Checker};
use crate::symmetric::{schur, specialize_b, to_schur_basis};
use crate::tau::{expand_tau_symbolic, Param};

/// `β_N = 1/∏_{k=1}^{N-1} (2k)!`, with `β_0 = 1`.
pub fn beta(n: u32) -> BigRat {
    let mut d = BigInt::one();
    let mut f = BigInt::one();
    for m in 1..2 * n.max(1) - 1 {
        f *= m;
        if m % 2 == 0 {
            d *= &f;
        }
    }
    BigRat::from_integer(d).recip()
}

/// The falling factorial `(2N + s)_m` as a polynomial in `N`.
fn falling(s: i64, m: i64) -> RatFun {
    (0..m).fold(RatFun::one(), |acc, i| acc.mul(&RatFun::linear(Var::N, s - i, 2)))
}

/// `R_k(N) = 1/(2N+2k-4)_{2k-2}`.
pub fn r_ratio(k: i64) -> Result<RatFun> {
    Ok(falling(2 * k - 4, 2 * k - 2).inv()?)
}

/// `S_k(N) = 1/((2N+2k-2)_{2k} (2N+2k-4)_{2k})`.
pub fn s_ratio(k: i64) -> Result<RatFun> {
    Ok(falling(2 * k - 2, 2 * k).mul(&falling(2 * k - 4, 2 * k)).inv()?)
}

/// `R_k` and `S_k` against the ratios of `β` at integer `N`.
pub fn check_beta_ratios(n_range: (u32, u32), k_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("beta ratios", "beta_{N-1}beta_{N+k-1}/(beta_N beta_{N+k-2}) = R_k(N), same for S_k")
        .param("N", format!("{}..={}", n_range.0, n_range.1))
        .param("k_max", k_max);
    for k in 1..=k_max {
        let (r, s) = (r_ratio(k as i64)?, s_ratio(k as i64)?);
        for n in n_range.0..=n_range.1 {
            let at = [(Var::N, int(n as i64))];
            let base = beta(n) * beta(n + k - 2);
            let r_expected = beta(n - 1) * beta(n + k - 1) / &base;
            ch.compare(k, format!("R_{k}({n})"), &r_expected, &r.eval(&at)?);
            let s_expected = beta(n - 2) * beta(n + k) / &base;
            ch.compare(k, format!("S_{k}({n})"), &s_expected, &s.eval(&at)?);
        }
    }
    Ok(ch.finish())
}

/// `τ(N) = Σ_λ a_λ(N) s_λ(p)` through degree `n_max`, which is
/// `τ_{b=1}(t; 2p, 1/(2N))` at `t = 1`, graded by degree.
pub fn bkp_tau(n_max: u32) -> Result<GradedSeries<RatFun>> {
    let slices = (0..=n_max)
        .into_par_iter()
        .map(|n| -> Result<SymFun<RatFun>> {
            let mut acc = SymFun::zero();
            for lambda in Partition::all(n) {
                acc = acc.add(&schur::<RatFun>(&lambda).scale(&a_coeff_def(&lambda)?));
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedSeries::from_slices(slices))
}

/// `τ(N)` built from zonal polynomials, `τ_{b=1}(t; 2p, u)` at `u = 1/(2N)`,
/// against the Schur-side construction of [`bkp_tau`].
pub fn check_bkp_tau_zonal(n_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("BKP tau from zonal side", "tau_{b=1}(t; 2p, 1/(2N)) = sum a_lambda(N) s_lambda(p)")
        .param("n_max", n_max);
    let zonal = expand_tau_symbolic(n_max, Param::N)?;
    let schur_side = bkp_tau(n_max)?;
    let two_n = RatFun::linear(Var::N, 0, 2);
    for n in 0..=n_max {
        let got = specialize_b(zonal.slice(n), &int(1))?
            .try_map(|c| c.substitute(Var::N, &two_n))?
            .rescale_p(|_| RatFun::from_int(2));
        let expected = schur_side.slice(n);
        let mut keys: Vec<&Partition> = expected.iter().map(|(m, _)| m).chain(got.iter().map(|(m, _)| m)).collect();
        keys.sort();
        keys.dedup();
        for mu in keys {
            ch.compare(n, mu, &expected.coeff(mu), &got.coeff(mu));
        }
    }
    Ok(ch.finish())
}

/// Keeps the Schur components `s_μ` with `ℓ(μ) <= l`.
pub fn trunc<C: Field>(f: &SymFun<C>, l: usize) -> SymFun<C> {
    let mut out = SymFun::zero();
    for (mu, c) in to_schur_basis(f) {
        if mu.len() <= l {
            out = out.add(&schur::<C>(&mu).scale(&c));
        }
    }
    out
}

/// Schur coefficients of `Trunc(τ, l)` through degree `n_max`.
pub fn trunc_coefficients(tau: &GradedSeries<RatFun>, l: usize) -> BTreeMap<Partition, RatFun> {
    tau.slices()
        .iter()
        .flat_map(|s| to_schur_basis(s).into_iter().filter(|(mu, _)| mu.len() <= l))
        .collect()
}

/// The Schur coefficients of `Trunc(τ, L)` have no pole at the integers
/// `L <= N <= L + n_max + 2`; the box shifts of a degree-`n_max` slice cannot
/// reach beyond that range.
pub fn check_trunc_poles(n_max: u32, l_max: usize) -> Result<CheckReport> {
    let mut ch = Checker::new("truncation poles", "Trunc(tau, L) has no pole at integers N >= L")
        .param("n_max", n_max)
        .param("l_max", l_max);
    let tau = bkp_tau(n_max)?;
    for l in 0..=l_max {
        for (mu, c) in trunc_coefficients(&tau, l) {
            for n in l..=l + n_max as usize + 2 {
                if let Err(e) = c.eval(&[(Var::N, int(n as i64))]) {
                    ch.fail(mu.size(), format!("{mu} L={l} N={n}"), "finite", e);
                } else {
                    ch.compare(mu.size(), format!("{mu} L={l} N={n}"), &0, &0);
                }
            }
        }
        // At N = L the truncation is the a_λ(L) sum over ℓ(λ) <= L.
        for (mu, c) in trunc_coefficients(&tau, l) {
            if l >= 1 {
                let v = c.eval(&[(Var::N, int(l as i64))])?;
                let expected = a_coeff_def(&mu)?.eval(&[(Var::N, int(l as i64))])?;
                ch.compare(mu.size(), format!("{mu} at N={l}"), &expected, &v);
            }
        }
    }
    Ok(ch.finish())
}

/// `-F_{3,1} + F_{2,2} + F_{1,1}^2/2 + F_{1,1,1,1}/12` times `τ(N)^2`, minus
/// `S_2(N) τ(N-2) τ(N+2)`, through degree `d_max`; the inputs are the
/// series at `N - 2`, `N` and `N + 2`.
pub fn bkp_residual<C: Field>(shifted: [&GradedSeries<C>; 3], s2: &C, d_max: u32) -> Result<GradedSeries<C>> {
    let [minus, tau, plus] = shifted;
    let tau = tau.truncate(d_max + 4);
    let f = tau.log()?;
    let f11 = f.derive(1).derive(1);
    let lhs = f
        .derive(2)
        .derive(2)
        .sub(&f.derive(3).derive(1))
        .add(&f11.mul(&f11).truncate(d_max).scale(&C::from_rat(&rat(1, 2))))
        .add(&f11.derive(1).derive(1).scale(&C::from_rat(&rat(1, 12))));
    let sq = tau.truncate(d_max).mul(&tau.truncate(d_max));
    let rhs = minus.truncate(d_max).mul(&plus.truncate(d_max)).scale(s2);
    Ok(lhs.mul(&sq).sub(&rhs))
}

/// How `N` is treated in the BKP check.
#[derive(Clone, Debug, PartialEq)]
pub enum BkpMode {
    /// Coefficients in `Q(N)`, shifted by substitution.
    Symbolic,
    /// Coefficients evaluated at the given rational values of `N`.
    Sampled(Vec<BigRat>),
}

impl BkpMode {
    /// Five rationals with denominators coprime to 2, away from every pole.
    pub fn default_samples() -> BkpMode {
        BkpMode::Sampled(vec![rat(7, 3), rat(11, 5), rat(-13, 7), rat(29, 9), rat(101, 11)])
    }
}

fn record<C: Field>(ch: &mut Checker, residual: &GradedSeries<C>, d_max: u32, label: &str) {
    for d in 0..=d_max {
        let slice = residual.slice(d);
        for (mu, c) in slice.iter() {
            ch.fail(d, format!("{label}{mu}"), C::zero(), c);
        }
        ch.compare(d, format!("{label}degree {d}"), &0, &(slice.len()));
    }
}

/// The first BKP equation for `τ(N)` through degree `d_max`; `τ` is expanded
/// through `d_max + 4`, the depth the fourth derivatives need.
pub fn check_bkp(d_max: u32, mode: &BkpMode) -> Result<CheckReport> {
    let mode_name = match mode {
        BkpMode::Symbolic => "symbolic".to_string(),
        BkpMode::Sampled(v) => format!("sampled at {}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
    };
    let mut ch = Checker::new("BKP equation", "-F31 + F22 + F11^2/2 + F1111/12 = S_2(N) tau(N-2) tau(N+2)/tau(N)^2")
        .param("d_max", d_max)
        .param("mode", mode_name);
    let tau = bkp_tau(d_max + 4)?;
    let s2 = s_ratio(2)?;
    match mode {
        BkpMode::Symbolic => {
            let minus = tau.map(|c| c.shift(Var::N, -2));
            let plus = tau.map(|c| c.shift(Var::N, 2));
            let res = bkp_residual([&minus, &tau, &plus], &s2, d_max)?;
            record(&mut ch, &res, d_max, "");
        }
        BkpMode::Sampled(points) => {
            let results = points
                .par_iter()
                .map(|n| -> Result<GradedSeries<BigRat>> {
                    let at = |k: i64| {
                        let x = n + int(k);
                        tau.try_map(move |c| c.eval(&[(Var::N, x.clone())]))
                    };
                    let s = s2.eval(&[(Var::N, n.clone())])?;
                    Ok(bkp_residual([&at(-2)?, &at(0)?, &at(2)?], &s, d_max)?)
                })
                .collect::<Result<Vec<_>>>()?;
            for (n, res) in points.iter().zip(&results) {
                record(&mut ch, res, d_max, &format!("N={n} "));
            }
        }
    }
    Ok(ch.finish())
}
