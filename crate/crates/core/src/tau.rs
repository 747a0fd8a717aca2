//! The generating function `τ = Σ_n t^n Σ_{λ⊢n} J_λ/j_λ ∏_{□∈λ} 1/(u^{-1} + c_b(□))`,
//! its rescaling `τ̃`, the evolution operator, the Virasoro operators and the
//! Féray coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use monohurwitz_algebra::{
    int, rat, AlgebraError, BigRat, Field, GradedSeries, MPoly, Partition, RatFun, SymFun, Var,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::linalg;
use crate::powerseries::PowerSeries;
use crate::report::{CheckReport, Checker};
use crate::symmetric::{content, contents, hk_of_multiset, hooks, laplace_beltrami, p_norm, JackTable};

/// The Jack table over `Q(b)`, shared by every symbolic computation.
pub fn symbolic_table() -> &'static JackTable<RatFun> {
    static TABLE: OnceLock<JackTable<RatFun>> = OnceLock::new();
    TABLE.get_or_init(JackTable::symbolic)
}

/// Zonal polynomials, `b = 1`, over the rationals.
pub fn zonal_table() -> &'static JackTable<BigRat> {
    static TABLE: OnceLock<JackTable<BigRat>> = OnceLock::new();
    TABLE.get_or_init(JackTable::zonal)
}

/// Which formal parameter carries the genus weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    /// Box weight `u / (1 + u c_b)`, coefficients in `Q(b, u)`.
    U,
    /// Box weight `1 / (N + c_b)` with `N = u^{-1}`, coefficients in `Q(b, N)`.
    N,
}

/// `c * ∏ f_i^{e_i}` with every `f_i` primitive with positive leading
/// coefficient.
#[derive(Clone, Debug, Default)]
struct Factored {
    c: BigInt,
    factors: Vec<(MPoly, u32)>,
}

impl Factored {
    fn one() -> Self {
        Factored { c: BigInt::one(), factors: Vec::new() }
    }

    fn push(&mut self, f: &MPoly, e: u32) {
        if let Some(v) = f.constant_value() {
            self.c *= v.pow(e);
            return;
        }
        let mut k = f.content();
        if !f.lc_sign_positive() {
            k = -k;
        }
        let p = f.div_int(&k);
        self.c *= k.pow(e);
        match self.factors.iter_mut().find(|(g, _)| *g == p) {
            Some((_, x)) => *x += e,
            None => self.factors.push((p, e)),
        }
    }

    fn exponent(&self, f: &MPoly) -> u32 {
        self.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e)
    }
}

/// Sums `Σ num_i / den_i` over a common factored denominator.
fn sum_factored(terms: &[(MPoly, Factored)]) -> Result<RatFun> {
    let mut common = Factored::one();
    for (_, d) in terms {
        common.c = common.c.lcm(&d.c.abs());
        for (f, e) in &d.factors {
            match common.factors.iter_mut().find(|(g, _)| g == f) {
                Some((_, x)) => *x = (*x).max(*e),
                None => common.factors.push((f.clone(), *e)),
            }
        }
    }
    let mut num = MPoly::zero();
    for (n, d) in terms {
        let mut co = MPoly::constant(&common.c / &d.c);
        for (f, e) in &common.factors {
            let missing = e - d.exponent(f);
            if missing > 0 {
                co = &co * &f.pow(missing);
            }
        }
        num = &num + &(n * &co);
    }
    Ok(RatFun::from_factored(num, common.c, &common.factors)?)
}

fn hook_denominator(lambda: &Partition) -> Factored {
    let mut d = Factored::one();
    for (r, c) in lambda.boxes() {
        let a = lambda.arm(r, c) as i64;
        let l = lambda.leg(r, c) as i64;
        d.push(&MPoly::linear(Var::B, a + l + 1, a), 1);
        d.push(&MPoly::linear(Var::B, a + 1 + l, a + 1), 1);
    }
    d
}

fn content_poly(row: u32, col: u32) -> MPoly {
    MPoly::linear(Var::B, col as i64 - row as i64, col as i64 - 1)
}

/// `[t^n] τ` over `Q(b, u)` or `Q(b, N)`, assembled over a common factored
/// denominator.
pub fn tau_slice_symbolic(n: u32, param: Param) -> Result<SymFun<RatFun>> {
    if n == 0 {
        return Ok(SymFun::one());
    }
    let table = symbolic_table();
    let lambdas = Partition::all(n);
    let jacks = lambdas.par_iter().map(|l| table.jack(l)).collect::<Result<Vec<_>>>()?;
    let dens: Vec<Factored> = lambdas
        .iter()
        .map(|lambda| {
            let mut d = hook_denominator(lambda);
            for (r, c) in lambda.boxes() {
                let w = match param {
                    Param::U => &MPoly::one() + &(&MPoly::var(Var::U) * &content_poly(r, c)),
                    Param::N => &MPoly::var(Var::N) + &content_poly(r, c),
                };
                d.push(&w, 1);
            }
            d
        })
        .collect();
    let lead = match param {
        Param::U => MPoly::var(Var::U).pow(n),
        Param::N => MPoly::one(),
    };
    let mus = Partition::all(n);
    let coeffs = mus
        .par_iter()
        .map(|mu| -> Result<(Partition, RatFun)> {
            let mut terms = Vec::new();
            let mut exact = true;
            for (j, d) in jacks.iter().zip(&dens) {
                let theta = j.coeff(mu);
                if theta.is_zero() {
                    continue;
                }
                match theta.denom().constant_value() {
                    Some(k) => {
                        let mut d = d.clone();
                        d.c *= k;
                        terms.push((theta.numer() * &lead, d));
                    }
                    None => exact = false,
                }
            }
            let value = if exact {
                sum_factored(&terms)?
            } else {
                tau_coeff_plain(&lambdas, &jacks, mu, param)?
            };
            Ok((mu.clone(), value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymFun::from_terms(coeffs))
}

fn tau_coeff_plain(
    lambdas: &[Partition],
    jacks: &[std::sync::Arc<SymFun<RatFun>>],
    mu: &Partition,
    param: Param,
) -> Result<RatFun> {
    let b = RatFun::var(Var::B);
    let mut acc = RatFun::zero();
    for (lambda, j) in lambdas.iter().zip(jacks) {
        let mut w = j.coeff(mu).div(&hooks(lambda, &b).j)?;
        for c in contents(lambda, &b) {
            w = match param {
                Param::U => {
                    let u = RatFun::var(Var::U);
                    w.mul(&u).div(&RatFun::one().add(&u.mul(&c)))?
                }
                Param::N => w.div(&RatFun::var(Var::N).add(&c))?,
            };
        }
        acc = acc.add(&w);
    }
    Ok(acc)
}

/// `τ` through `t^{n_max}` over `Q(b, u)` or `Q(b, N)`.
pub fn expand_tau_symbolic(n_max: u32, param: Param) -> Result<GradedSeries<RatFun>> {
    let slices = (0..=n_max).map(|n| tau_slice_symbolic(n, param)).collect::<Result<Vec<_>>>()?;
    Ok(GradedSeries::from_slices(slices))
}

/// `Σ_{λ⊢n} J_λ/j_λ ∏_{□} weight(row, col)` for any field of coefficients;
/// the weight receives the box coordinates so that conventions can be varied.
pub fn expand_tau_with<C: Field>(
    table: &JackTable<C>,
    n_max: u32,
    weight: impl Fn(u32, u32) -> Result<C> + Sync,
) -> Result<GradedSeries<C>> {
    let mut slices = vec![SymFun::one()];
    for n in 1..=n_max {
        let terms = Partition::all(n)
            .par_iter()
            .map(|lambda| -> Result<SymFun<C>> {
                let j = table.jack(lambda)?;
                let mut w = table.hooks(lambda).j.inv()?;
                for (r, c) in lambda.boxes() {
                    w = w.mul(&weight(r, c)?);
                }
                Ok(j.scale(&w))
            })
            .collect::<Result<Vec<_>>>()?;
        slices.push(terms.into_iter().fold(SymFun::zero(), |acc, t| acc.add(&t)));
    }
    Ok(GradedSeries::from_slices(slices))
}

/// Box weight `1 / (N + c_b)` for a field element `N`.
pub fn weight_n<C: Field>(b: &C, n: &C, row: u32, col: u32) -> Result<C> {
    let d = n.add(&content(b, row, col));
    if d.is_zero() {
        return Err(CoreError::Algebra(AlgebraError::PoleAtAssignment(format!("N={n} at box ({row},{col})"))));
    }
    Ok(d.inv()?)
}

/// Box weight `u / (1 + u c_b)`.
pub fn weight_u<C: Field>(b: &C, u: &C, row: u32, col: u32) -> Result<C> {
    let d = C::one().add(&u.mul(&content(b, row, col)));
    if d.is_zero() {
        return Err(CoreError::Algebra(AlgebraError::PoleAtAssignment(format!("u={u} at box ({row},{col})"))));
    }
    Ok(u.mul(&d.inv()?))
}

/// `τ` with `b` and `N = u^{-1}` fixed to rationals.
pub fn expand_tau_sampled(n_max: u32, b: &BigRat, n: &BigRat) -> Result<GradedSeries<BigRat>> {
    let table = JackTable::new(b.clone());
    expand_tau_with(&table, n_max, |r, c| weight_n(b, n, r, c))
}

/// `τ̃(t; p, u) = τ(-t/u; p, -u)` from `τ` over `Q(b, u)`.
pub fn rescale_tilde(tau: &GradedSeries<RatFun>) -> Result<GradedSeries<RatFun>> {
    let u = RatFun::var(Var::U);
    let minus_u = u.neg();
    let slices = tau
        .slices()
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let scale = minus_u.pow(n as i32)?.inv()?;
            s.try_map(|c| Ok(c.substitute(Var::U, &minus_u)?.mul(&scale)))
        })
        .collect::<std::result::Result<Vec<_>, AlgebraError>>()?;
    Ok(GradedSeries::from_slices(slices))
}

/// Expands every coefficient as a power series in `u` through `u^order`.
pub fn u_expansion(s: &GradedSeries<RatFun>, order: u32) -> Result<GradedSeries<PowerSeries<RatFun>>> {
    Ok(s.try_map(|c| Ok(PowerSeries::new(c.taylor(Var::U, order)?, order)))?)
}

/// `E_b τ` slice by slice: `u p_1 τ_{n-1}/(1+b) - 2u D_b τ_n`.
pub fn apply_eb<C: Field>(tau: &GradedSeries<C>, b: &C, u: &C) -> Result<GradedSeries<C>> {
    let one_b_inv = C::one().add(b).inv()?;
    let two_u = u.mul_int(2);
    let slices = (0..=tau.precision())
        .map(|n| {
            let d = laplace_beltrami(tau.slice(n), b).scale(&two_u).neg();
            if n == 0 {
                d
            } else {
                d.add(&tau.slice(n - 1).mul_pk(1).scale(&u.mul(&one_b_inv)))
            }
        })
        .collect();
    Ok(GradedSeries::from_slices(slices))
}

/// `(t d/dt - E_b) τ`; every slice only involves `τ_n` and `τ_{n-1}`.
pub fn evolution_residual<C: Field>(tau: &GradedSeries<C>, b: &C, u: &C) -> Result<GradedSeries<C>> {
    Ok(tau.euler().sub(&apply_eb(tau, b, u)?))
}

/// `L'_i = p_i^*/u + (1+b) Σ_{m+n=i} p_m^* p_n^* + Σ_n p_n p_{n+i}^* + b(i-1) p_i^*`,
/// the Virasoro operator without its `t` term; `m, n` run over ordered pairs.
pub fn virasoro_prime<C: Field>(i: u32, f: &SymFun<C>, b: &C, u_inv: &C) -> SymFun<C> {
    assert!(i >= 1, "Virasoro operators are indexed from 1");
    let star = f.pk_star(i);
    let mut out = star.scale(&u_inv.add(&b.mul_int(i as i64 - 1)));
    let one_b = C::one().add(b);
    for m in 1..i {
        out = out.add(&f.pk_star(i - m).pk_star(m).scale(&one_b));
    }
    for n in 1..=f.max_degree().saturating_sub(i) {
        let g = f.pk_star(n + i);
        if !g.is_zero() {
            out = out.add(&g.mul_pk(n));
        }
    }
    out
}

/// A series in `t` whose slices need not be homogeneous.
pub type TMap<C> = BTreeMap<u32, SymFun<C>>;

/// `L_i f = L'_i f - δ_{i,1} t f/(1+b)` on a `t`-indexed family.
pub fn virasoro_on_tmap<C: Field>(i: u32, f: &TMap<C>, b: &C, u_inv: &C) -> Result<TMap<C>> {
    let mut out: TMap<C> = BTreeMap::new();
    let mut put = |n: u32, g: SymFun<C>| {
        let e = out.entry(n).or_insert_with(SymFun::zero);
        *e = e.add(&g);
    };
    let one_b_inv = C::one().add(b).inv()?;
    for (&n, g) in f {
        put(n, virasoro_prime(i, g, b, u_inv));
        if i == 1 {
            put(n + 1, g.scale(&one_b_inv).neg());
        }
    }
    out.retain(|_, g| !g.is_zero());
    Ok(out)
}

/// `L_i τ` slice by slice; slice `n` is `L'_i τ_n - δ_{i,1} τ_{n-1}/(1+b)`.
pub fn apply_virasoro<C: Field>(tau: &GradedSeries<C>, i: u32, b: &C, u_inv: &C) -> Result<Vec<SymFun<C>>> {
    let one_b_inv = C::one().add(b).inv()?;
    Ok((0..=tau.precision())
        .map(|n| {
            let mut s = virasoro_prime(i, tau.slice(n), b, u_inv);
            if i == 1 && n > 0 {
                s = s.sub(&tau.slice(n - 1).scale(&one_b_inv));
            }
            s
        })
        .collect())
}

/// `([L_i, L_j] - (i-j) L_{i+j}) f`.
pub fn virasoro_commutator<C: Field>(i: u32, j: u32, f: &TMap<C>, b: &C, u_inv: &C) -> Result<TMap<C>> {
    let lij = virasoro_on_tmap(i, &virasoro_on_tmap(j, f, b, u_inv)?, b, u_inv)?;
    let lji = virasoro_on_tmap(j, &virasoro_on_tmap(i, f, b, u_inv)?, b, u_inv)?;
    let lsum = virasoro_on_tmap(i + j, f, b, u_inv)?;
    let k = C::from_int(i as i64 - j as i64);
    let mut out = lij;
    for (n, g) in lji {
        let e = out.entry(n).or_insert_with(SymFun::zero);
        *e = e.sub(&g);
    }
    for (n, g) in lsum {
        let e = out.entry(n).or_insert_with(SymFun::zero);
        *e = e.sub(&g.scale(&k));
    }
    out.retain(|_, g| !g.is_zero());
    Ok(out)
}

/// `u Σ_i p_i L_i f` slice by slice, for a series with homogeneous slices.
pub fn virasoro_sum<C: Field>(f: &GradedSeries<C>, b: &C, u: &C) -> Result<GradedSeries<C>> {
    let u_inv = u.inv()?;
    let p = f.precision();
    let mut slices = vec![SymFun::zero(); p as usize + 1];
    for i in 1..=p {
        let li = apply_virasoro(f, i, b, &u_inv)?;
        for n in i..=p {
            slices[n as usize] = slices[n as usize].add(&li[n as usize].mul_pk(i).scale(u));
        }
    }
    Ok(GradedSeries::from_slices(slices))
}

/// Rebuilds `τ` from `[t^0] τ = 1` and the evolution equation alone, solving
/// `(n + 2u D_b) τ_n = u p_1 τ_{n-1}/(1+b)` degree by degree.
pub fn reconstruct_from_evolution<C: Field>(n_max: u32, b: &C, u: &C) -> Result<GradedSeries<C>> {
    let mut slices = vec![SymFun::one()];
    let rhs_scale = u.mul(&C::one().add(b).inv()?);
    for n in 1..=n_max {
        let basis = Partition::all(n);
        let index: HashMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let size = basis.len();
        let mut a = vec![vec![C::zero(); size]; size];
        for (col, mu) in basis.iter().enumerate() {
            let img = laplace_beltrami(&SymFun::p(mu.clone()), b).scale(&u.mul_int(2));
            for (nu, c) in img.iter() {
                a[index[nu]][col] = a[index[nu]][col].add(c);
            }
            a[col][col] = a[col][col].add(&C::from_int(n as i64));
        }
        let rhs_fun = slices[n as usize - 1].mul_pk(1).scale(&rhs_scale);
        let rhs: Vec<C> = basis.iter().map(|mu| rhs_fun.coeff(mu)).collect();
        let x = linalg::solve(&a, &rhs, &format!("evolution step {n}"))?;
        slices.push(SymFun::from_terms(basis.iter().cloned().zip(x)));
    }
    Ok(GradedSeries::from_slices(slices))
}

/// Féray coefficients `a^k_ρ = [(ut)^{|ρ|} (-u)^k p_ρ] (1+b)^{ℓ(ρ)} z_ρ τ`,
/// extracted from `τ` over `Q(b, u)`.
pub struct FerayTable {
    max_size: u32,
    max_k: u32,
    values: HashMap<(u32, Partition), RatFun>,
}

impl FerayTable {
    pub fn extract(tau: &GradedSeries<RatFun>, max_k: u32) -> Result<Self> {
        let b = RatFun::var(Var::B);
        let u = RatFun::var(Var::U);
        let max_size = tau.precision();
        let entries = Partition::all_up_to(max_size)
            .into_par_iter()
            .map(|rho| -> Result<Vec<((u32, Partition), RatFun)>> {
                let n = rho.size();
                let c = tau.coeff(&rho).div(&u.pow(n as i32)?)?;
                let series = c.taylor(Var::U, max_k)?;
                let norm = p_norm(&rho, &b);
                Ok(series
                    .into_iter()
                    .enumerate()
                    .map(|(k, x)| {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        ((k as u32, rho.clone()), x.mul(&norm).scale_int(sign))
                    })
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FerayTable { max_size, max_k, values: entries.into_iter().flatten().collect() })
    }

    pub fn max_size(&self) -> u32 {
        self.max_size
    }

    pub fn max_k(&self) -> u32 {
        self.max_k
    }

    /// `a^k_ρ`, with `a^{-1} = 0`.
    pub fn get(&self, k: i64, rho: &Partition) -> RatFun {
        if k < 0 {
            return RatFun::zero();
        }
        match self.values.get(&(k as u32, rho.clone())) {
            Some(v) => v.clone(),
            None => panic!("a^{k}_{rho} is outside the extracted range"),
        }
    }

    /// Right-hand side of the linear recursion for `a^k_{ρ∪(m)}`.
    pub fn recursion_rhs(&self, k: u32, rho: &Partition, m: u32) -> RatFun {
        let b = RatFun::var(Var::B);
        let k1 = k as i64 - 1;
        let mut acc = if m == 1 { self.get(k as i64, rho) } else { RatFun::zero() };
        for r in 1..m {
            acc = acc.add(&self.get(k1, &rho.with_part(r).with_part(m - r)));
        }
        let one_b = RatFun::one().add(&b);
        for &part in rho.parts() {
            let target = rho.without_part(part).expect("part of rho").with_part(part + m);
            acc = acc.add(&self.get(k1, &target).mul(&one_b).scale_int(part as i64));
        }
        if m > 1 {
            acc = acc.add(&self.get(k1, &rho.with_part(m)).mul(&b).scale_int(m as i64 - 1));
        }
        acc
    }
}

fn b_var() -> RatFun {
    RatFun::var(Var::B)
}

fn u_var() -> RatFun {
    RatFun::var(Var::U)
}

/// Evolution equation for the symbolic `τ` over `Q(b, u)`.
pub fn check_evolution(n_max: u32) -> Result<CheckReport> {
    let tau = expand_tau_symbolic(n_max, Param::U)?;
    let residual = evolution_residual(&tau, &b_var(), &u_var())?;
    let mut ch = Checker::new("evolution", "t d/dt tau = E_b tau").param("n_max", n_max).param("mode", "symbolic b,u");
    compare_zero(&mut ch, residual.slices());
    Ok(ch.finish())
}

/// Evolution equation with `b` and `N = u^{-1}` fixed to rationals.
pub fn check_evolution_sampled(n_max: u32, b: &BigRat, n: &BigRat) -> Result<CheckReport> {
    let tau = expand_tau_sampled(n_max, b, n)?;
    let u = n.inv()?;
    let residual = evolution_residual(&tau, b, &u)?;
    let mut ch = Checker::new("evolution", "t d/dt tau = E_b tau")
        .param("n_max", n_max)
        .param("mode", "sampled")
        .param("b", b)
        .param("N", n);
    compare_zero(&mut ch, residual.slices());
    Ok(ch.finish())
}

fn compare_zero<C: Field>(ch: &mut Checker, slices: &[SymFun<C>]) {
    for (n, s) in slices.iter().enumerate() {
        if s.is_zero() {
            ch.compare(n as u32, "*", &0, &0);
        }
        for (mu, c) in s.iter() {
            ch.compare(n as u32, mu, &C::zero(), c);
        }
    }
}

/// `L_i τ = 0` for `i = 1..=i_max` through `t^{n_max}`.
pub fn check_virasoro(n_max: u32, i_max: u32) -> Result<CheckReport> {
    let tau = expand_tau_symbolic(n_max, Param::U)?;
    let u_inv = u_var().inv()?;
    let b = b_var();
    let mut ch = Checker::new("virasoro", "L_i tau = 0")
        .param("n_max", n_max)
        .param("i_max", i_max)
        .param("mode", "symbolic b,u");
    let results = (1..=i_max).into_par_iter().map(|i| apply_virasoro(&tau, i, &b, &u_inv)).collect::<Result<Vec<_>>>()?;
    for (i, slices) in results.iter().enumerate() {
        for (n, s) in slices.iter().enumerate() {
            ch.compare(n as u32, format!("L_{} at t^{n}", i + 1), &SymFun::zero(), s);
        }
    }
    Ok(ch.finish())
}

fn random_terms<R: rand::Rng>(rng: &mut R, parts: Vec<Partition>, density: f64) -> SymFun<BigRat> {
    let mut f = SymFun::zero();
    for mu in parts {
        if rng.gen_bool(density) {
            let c = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
            f.add_term(mu, c);
        }
    }
    f
}

/// A random series with homogeneous slices and small rational coefficients.
pub fn random_series<R: rand::Rng>(rng: &mut R, precision: u32) -> GradedSeries<BigRat> {
    let slices = (0..=precision).map(|n| random_terms(rng, Partition::all(n), 0.8)).collect();
    GradedSeries::from_slices(slices)
}

/// A random `t`-free symmetric function of degree at most `max_degree`.
pub fn random_symfun<R: rand::Rng>(rng: &mut R, max_degree: u32) -> SymFun<BigRat> {
    random_terms(rng, Partition::all_up_to(max_degree), 0.5)
}

/// Virasoro commutation relations on random test functions, with `b` and `u`
/// kept symbolic.
pub fn check_commutators(pairs: &[(u32, u32)], samples: usize, max_degree: u32, seed: u64) -> Result<CheckReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let b = b_var();
    let u_inv = u_var().inv()?;
    let mut ch = Checker::new("virasoro-commutators", "[L_i, L_j] = (i-j) L_{i+j}")
        .param("samples", samples)
        .param("max_degree", max_degree);
    for _ in 0..samples {
        let f = random_symfun(&mut rng, max_degree).map(RatFun::from_rat);
        let f: TMap<RatFun> = BTreeMap::from([(0, f)]);
        for &(i, j) in pairs {
            let r = virasoro_commutator(i, j, &f, &b, &u_inv)?;
            ch.compare(max_degree, format!("[L_{i}, L_{j}]"), &0, &r.len());
        }
    }
    Ok(ch.finish())
}

/// The sum identity `u Σ_i p_i L_i = t d/dt - E_b` on random series.
pub fn check_virasoro_sum(samples: usize, precision: u32, seed: u64) -> Result<CheckReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let b = b_var();
    let u = u_var();
    let mut ch = Checker::new("virasoro-sum", "u sum_i p_i L_i = t d/dt - E_b").param("samples", samples);
    for _ in 0..samples {
        let f = random_series(&mut rng, precision).map(RatFun::from_rat);
        let lhs = virasoro_sum(&f, &b, &u)?;
        let rhs = evolution_residual(&f, &b, &u)?;
        for n in 0..=precision {
            ch.compare(n, "slice", rhs.slice(n), lhs.slice(n));
        }
    }
    Ok(ch.finish())
}

/// The evolution equation and `[t^0] τ = 1` determine `τ`.
pub fn check_reconstruction(n_max: u32) -> Result<CheckReport> {
    let tau = expand_tau_symbolic(n_max, Param::U)?;
    let rebuilt = reconstruct_from_evolution(n_max, &b_var(), &u_var())?;
    let mut ch = Checker::new("evolution-uniqueness", "tau rebuilt from its evolution equation").param("n_max", n_max);
    for n in 0..=n_max {
        for mu in Partition::all(n) {
            ch.compare(n, &mu, &tau.coeff(&mu), &rebuilt.coeff(&mu));
        }
    }
    Ok(ch.finish())
}

/// Féray recursion, polynomiality of `a^k_ρ` and the `h_k` identity.
pub fn check_feray(max_size: u32, max_k: u32) -> Result<CheckReport> {
    let tau = expand_tau_symbolic(max_size, Param::U)?;
    let table = FerayTable::extract(&tau, max_k)?;
    let mut ch = Checker::new("feray", "linear recursion for a^k_rho")
        .param("max_size", max_size)
        .param("max_k", max_k);
    for rho in Partition::all_up_to(max_size - 1) {
        for m in 1..=max_size - rho.size() {
            let target = rho.with_part(m);
            for k in 0..=max_k {
                let lhs = table.get(k as i64, &target);
                ch.compare(target.size(), format!("a^{k}_{target}"), &table.recursion_rhs(k, &rho, m), &lhs);
            }
        }
    }
    for rho in Partition::all_up_to(max_size) {
        for k in 0..=max_k {
            let a = table.get(k as i64, &rho);
            if !a.is_polynomial() {
                ch.fail(rho.size(), format!("a^{k}_{rho}"), "a polynomial in b", &a);
            }
        }
    }
    let sym = symbolic_table();
    let b = b_var();
    for lambda in Partition::all_up_to(max_size).into_iter().skip(1) {
        let xs = contents(&lambda, &b);
        let jack = sym.jack(&lambda)?;
        for k in 0..=max_k {
            let expected = hk_of_multiset(k, &xs);
            let got = Partition::all(lambda.size())
                .iter()
                .fold(RatFun::zero(), |acc, mu| acc.add(&table.get(k as i64, mu).mul(&jack.coeff(mu))));
            ch.compare(lambda.size(), format!("h_{k}(C_b({lambda}))"), &expected, &got);
        }
    }
    Ok(ch.finish())
}

/// `Σ_{λ⊢n} θ_ρ(λ) θ_μ(λ) / j_λ = δ_{ρμ} / ((1+b)^{ℓ(ρ)} z_ρ)`.
pub fn check_character_orthogonality(n_max: u32) -> Result<CheckReport> {
    let table = symbolic_table();
    let b = b_var();
    let mut ch = Checker::new("jack-character-orthogonality", "sum over lambda of theta_rho theta_mu / j_lambda")
        .param("n_max", n_max);
    for n in 1..=n_max {
        let parts = Partition::all(n);
        let jacks = parts.par_iter().map(|l| table.jack(l)).collect::<Result<Vec<_>>>()?;
        let inv_j: Vec<RatFun> = parts.iter().map(|l| hooks(l, &b).j.inv()).collect::<std::result::Result<_, _>>()?;
        for (x, rho) in parts.iter().enumerate() {
            for mu in &parts[x..] {
                let got = jacks
                    .iter()
                    .zip(&inv_j)
                    .fold(RatFun::zero(), |acc, (j, w)| acc.add(&j.coeff(rho).mul(&j.coeff(mu)).mul(w)));
                let expected = if rho == mu { p_norm(rho, &b).inv()? } else { RatFun::zero() };
                ch.compare(n, format!("({rho},{mu})"), &expected, &got);
            }
        }
    }
    Ok(ch.finish())
}

fn in_nb(c: &RatFun) -> bool {
    c.is_polynomial() && c.numer().terms().iter().all(|(_, k)| !k.is_negative())
}

/// `(1+b) t d/dt log τ̃` has coefficients in `N[b]`, checked through `u^{u_order}`.
pub fn check_positivity(n_max: u32, u_order: u32) -> Result<CheckReport> {
    let tilde = rescale_tilde(&expand_tau_symbolic(n_max, Param::U)?)?;
    let series = u_expansion(&tilde, u_order)?;
    let one_b = PowerSeries::constant(RatFun::one().add(&b_var()));
    let f = series.log()?.euler().scale(&one_b);
    let mut ch = Checker::new("positivity", "(1+b) t d/dt log tau~ has coefficients in N[b]")
        .param("n_max", n_max)
        .param("u_order", u_order);
    for n in 1..=n_max {
        for (mu, s) in f.slice(n).iter() {
            for k in 0..=u_order {
                let c = s.coeff(k);
                ch.compare(n, format!("p{mu} u^{k}"), &true, &in_nb(&c));
            }
        }
    }
    Ok(ch.finish())
}

/// `[t^n p_μ] τ` at `b = 0` from the series over `Q(b, u)`.
pub fn tau_at_b_zero(tau: &GradedSeries<RatFun>) -> Result<GradedSeries<RatFun>> {
    Ok(tau.try_map(|c| c.specialize(Var::B, &int(0)))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::part;

    #[test]
    fn low_degree_examples() {
        let tau = expand_tau_symbolic(2, Param::U).unwrap();
        assert_eq!(tau.slice(0), &SymFun::one());
        let one_b = RatFun::linear(Var::B, 1, 1);
        assert_eq!(tau.coeff(&part![1]), u_var().div(&one_b).unwrap());
        let at0 = tau.coeff(&part![2]).specialize(Var::B, &int(0)).unwrap();
        let u = u_var();
        let expected = u.pow(3).unwrap().neg().div(&RatFun::one().sub(&u.pow(2).unwrap()).scale_int(2)).unwrap();
        assert_eq!(at0, expected);
    }

    #[test]
    fn factored_and_plain_assembly_agree() {
        let table = symbolic_table();
        let b = b_var();
        let u = u_var();
        let plain = expand_tau_with(table, 4, |r, c| weight_u(&b, &u, r, c)).unwrap();
        assert_eq!(plain, expand_tau_symbolic(4, Param::U).unwrap());
        let n = RatFun::var(Var::N);
        let plain_n = expand_tau_with(table, 3, |r, c| weight_n(&b, &n, r, c)).unwrap();
        assert_eq!(plain_n, expand_tau_symbolic(3, Param::N).unwrap());
    }

    #[test]
    fn tilde_low_degree() {
        let tilde = rescale_tilde(&expand_tau_symbolic(1, Param::U).unwrap()).unwrap();
        assert_eq!(tilde.coeff(&part![1]), RatFun::linear(Var::B, 1, 1).inv().unwrap());
    }

    #[test]
    fn sampled_mode_reports_poles() {
        assert!(expand_tau_sampled(2, &int(0), &int(1)).is_err());
        assert!(expand_tau_sampled(2, &int(0), &rat(1, 3)).is_ok());
    }

    #[test]
    fn feray_low_values() {
        let tau = expand_tau_symbolic(2, Param::U).unwrap();
        let t = FerayTable::extract(&tau, 2).unwrap();
        assert!(t.get(0, &part![1]).is_one());
        assert!(t.get(1, &part![1]).is_zero());
        assert!(t.get(1, &part![2]).is_one());
        assert!(t.get(1, &part![1, 1]).is_zero());
    }

    #[test]
    fn commutator_on_p3() {
        let f: TMap<RatFun> = BTreeMap::from([(0, SymFun::pk(3))]);
        let r = virasoro_commutator(1, 2, &f, &b_var(), &u_var().inv().unwrap()).unwrap();
        assert!(r.is_empty(), "{r:?}");
    }
}
