//! Dimensions of orthogonal and symplectic representations as polynomials in
//! `N`, the coefficients `a_λ(n)`, and the Schur expansions of `τ` at
//! `b = 1` and `b = -1/2`.
//!
//! Rational functions of the formal rank `n` in `a_λ(n)` are stored in the
//! variable `N`.

use monohurwitz_algebra::{int, rat, BigRat, Field, MPoly, Partition, RatFun, SymFun, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{CoreError, Result};
use crate::report::{CheckReport, Checker};
use crate::symmetric::{char_sym, content, hooks, schur, specialize_b, JackTable};
use crate::tau::{expand_tau_symbolic, virasoro_prime, zonal_table, Param};

/// `o_λ(1^N) = (1/hook_λ) ∏ (N + s)`, kept as the list of shifts `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoDim {
    pub lambda: Partition,
    pub hook: BigInt,
    pub shifts: Vec<i64>,
}

/// The El Samra–King product for `o_λ(1^N)`.
pub fn ortho_dim(lambda: &Partition) -> OrthoDim {
    let conj = lambda.conjugate();
    let shifts = lambda
        .boxes()
        .map(|(x, y)| {
            let (x, y) = (x as i64, y as i64);
            if x <= y {
                lambda.part(x as usize) as i64 + lambda.part(y as usize) as i64 - x - y
            } else {
                -(conj.part(x as usize) as i64) - conj.part(y as usize) as i64 + x + y - 2
            }
        })
        .collect();
    OrthoDim { lambda: lambda.clone(), hook: lambda.hook_product(), shifts }
}

impl OrthoDim {
    /// `hook_λ · o_λ(1^{kN})` as a polynomial.
    pub fn scaled_product(&self, k: i64) -> RatFun {
        self.shifts.iter().fold(RatFun::one(), |acc, &s| acc.mul(&RatFun::linear(Var::N, s, k)))
    }

    /// `o_λ(1^N)`.
    pub fn polynomial(&self) -> RatFun {
        self.at_scaled(1)
    }

    /// `o_λ(1^{kN})`.
    pub fn at_scaled(&self, k: i64) -> RatFun {
        let h = BigRat::from_integer(self.hook.clone());
        self.scaled_product(k).mul(&RatFun::from_rat(&h.recip()))
    }

    /// `c / (hook_λ · o_λ(1^{kN}))`, assembled from its linear factors.
    pub fn recip_scaled(&self, k: i64, c: &BigRat) -> Result<RatFun> {
        recip_linear(c, self.shifts.iter().map(|&s| (k, s)))
    }

    pub fn eval(&self, n: &BigRat) -> BigRat {
        let p = self.shifts.iter().fold(<BigRat as One>::one(), |acc, &s| acc * (n + BigRat::from_integer(s.into())));
        p / BigRat::from_integer(self.hook.clone())
    }
}

/// `c / ∏ (k N + s)` with the factors normalized for `RatFun::from_factored`.
fn recip_linear(c: &BigRat, factors: impl IntoIterator<Item = (i64, i64)>) -> Result<RatFun> {
    let mut konst = c.denom().clone();
    let mut fs: Vec<(MPoly, u32)> = Vec::new();
    for (k, s) in factors {
        if k == 0 {
            if s == 0 {
                return Err(CoreError::Algebra(monohurwitz_algebra::AlgebraError::DivisionByZero));
            }
            konst *= s;
            continue;
        }
        let g = k.gcd(&s) * k.signum();
        konst *= g;
        let f = MPoly::linear(Var::N, s / g, k / g);
        match fs.iter_mut().find(|(h, _)| *h == f) {
            Some((_, e)) => *e += 1,
            None => fs.push((f, 1)),
        }
    }
    Ok(RatFun::from_factored(MPoly::constant(c.numer().clone()), konst, &fs)?)
}

/// `so_λ(1^{2n})` from the Weyl dimension formula.
pub fn so_dim(lambda: &Partition, n: usize) -> Result<BigRat> {
    if lambda.len() > n {
        return Err(CoreError::InvalidPadding { lambda: lambda.clone(), k: n });
    }
    let rho: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64 - i as i64).collect();
    let nn = n as i64;
    let mut v = <BigRat as One>::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let (ri, rj) = (rho[i - 1], rho[j - 1]);
            let (ii, jj) = (i as i64, j as i64);
            v *= BigRat::new(((ri - rj) * (ri + rj + 2 * nn)).into(), ((jj - ii) * (2 * nn - ii - jj)).into());
        }
    }
    Ok(v)
}

/// `sp_λ(1^{2n})` as a polynomial in `n`, through `o_{λ^t}(1^u) = (-1)^{|λ|} sp_λ(1^{-u})`.
pub fn sp_dim(lambda: &Partition) -> RatFun {
    let v = ortho_dim(&lambda.conjugate()).at_scaled(-2);
    if lambda.size() % 2 == 0 {
        v
    } else {
        v.neg()
    }
}

/// `sp_λ(1^{2n})` from the Weyl dimension formula for `Sp(2n)`.
pub fn sp_dim_weyl(lambda: &Partition, n: usize) -> Result<BigRat> {
    if lambda.len() > n {
        return Err(CoreError::InvalidPadding { lambda: lambda.clone(), k: n });
    }
    let l: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64 + (n - i) as i64 + 1).collect();
    let m: Vec<i64> = (1..=n).map(|i| (n - i) as i64 + 1).collect();
    let mut v = <BigRat as One>::one();
    for i in 0..n {
        v *= BigRat::new(l[i].into(), m[i].into());
        for j in i + 1..n {
            v *= BigRat::new(((l[i] - l[j]) * (l[i] + l[j])).into(), ((m[i] - m[j]) * (m[i] + m[j])).into());
        }
    }
    Ok(v)
}

/// `a_λ(n) = 1 / (hook_λ^2 · o_λ(1^{2n}))`.
pub fn a_coeff_def(lambda: &Partition) -> Result<RatFun> {
    let d = ortho_dim(lambda);
    d.recip_scaled(2, &BigRat::from_integer(d.hook.clone()).recip())
}

/// `a_λ(n)` from the product formula with `λ` padded to `k` parts.
pub fn a_coeff_closed(lambda: &Partition, k: usize) -> Result<RatFun> {
    if k < lambda.len() {
        return Err(CoreError::InvalidPadding { lambda: lambda.clone(), k });
    }
    let parts: Vec<i64> = (1..=k).map(|i| lambda.part(i) as i64).collect();
    a_coeff_tuple(&parts)
}

/// The product formula for `a_λ(n)` on a tuple of non-negative integers,
/// antisymmetric in `ρ_i = λ_i - i`.
pub fn a_coeff_tuple(parts: &[i64]) -> Result<RatFun> {
    if let Some(&x) = parts.iter().find(|&&x| x < 0) {
        return Err(CoreError::Config(format!("negative entry {x} in {parts:?}")));
    }
    let k = parts.len() as i64;
    let rho: Vec<i64> = parts.iter().enumerate().map(|(i, &l)| l - i as i64 - 1).collect();
    let mut c = <BigRat as One>::one();
    // Linear factors `k N + s`, with exponent +1 in the numerator or -1.
    let mut num: Vec<(i64, i64)> = Vec::new();
    let mut den: Vec<(i64, i64)> = Vec::new();
    for i in 0..rho.len() {
        for j in i + 1..rho.len() {
            let d = rho[i] - rho[j];
            if d == 0 {
                return Ok(RatFun::zero());
            }
            c *= BigRat::from_integer(d.into());
            den.push((2, rho[i] + rho[j]));
        }
    }
    for (idx, &r) in rho.iter().enumerate() {
        let i = idx as i64 + 1;
        c /= BigRat::from_integer(2 * factorial(r + k));
        den.push((1, r));
        // (2n - 2i)! / (2n + r - k - 1)!
        let (top, bottom) = (-2 * i, r - k - 1);
        if top >= bottom {
            num.extend((bottom + 1..=top).map(|s| (2, s)));
        } else {
            den.extend((top + 1..=bottom).map(|s| (2, s)));
        }
    }
    let mut numer = RatFun::from_rat(&c);
    for (kk, s) in num {
        numer = numer.mul(&RatFun::linear(Var::N, s, kk));
    }
    Ok(numer.mul(&recip_linear(&<BigRat as One>::one(), den)?))
}

fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of {n}");
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Sorts `ρ` decreasingly with sign; `None` when two entries coincide or the
/// sorted tuple leaves the range of partitions, where `s^{(ρ)}` vanishes.
pub fn straighten(rho: &[i64]) -> Option<(i64, Partition)> {
    let mut v = rho.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut parts = Vec::with_capacity(v.len());
    for (i, r) in v.iter().enumerate() {
        let l = r + i as i64 + 1;
        if l < 0 {
            return None;
        }
        parts.push(l as u32);
    }
    Some((sign, Partition::from_parts(parts)))
}

fn rho_of(lambda: &Partition, k: usize) -> Vec<i64> {
    (1..=k).map(|i| lambda.part(i) as i64 - i as i64).collect()
}

/// `s^{(ρ)}(p/2)` with antisymmetric extension.
pub fn schur_rho_half(rho: &[i64]) -> SymFun<RatFun> {
    match straighten(rho) {
        None => SymFun::zero(),
        Some((sign, lambda)) => {
            let half = RatFun::from_rat(&rat(1, 2));
            let s: SymFun<RatFun> = schur(&lambda);
            s.rescale_p(|_| half.clone()).scale(&RatFun::from_int(sign))
        }
    }
}

/// `s_λ(p/2)`.
pub fn schur_half(lambda: &Partition) -> SymFun<RatFun> {
    schur_rho_half(&rho_of(lambda, lambda.len()))
}

/// `Σ_i (n + ρ_i + r) a_{λ+rε_i}(n) / a_λ(n) = δ_{r,1}/2` for `|λ| <= max_size`,
/// `r <= r_max`, with `k = ℓ(λ)+r` and `k = ℓ(λ)+r+1`.
pub fn check_toprove(max_size: u32, r_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("a-coefficient sum", "sum_i (n+rho_i+r) a_{lambda+r e_i}/a_lambda = delta_{r,1}/2")
        .param("max_size", max_size)
        .param("r_max", r_max);
    let cases: Vec<(Partition, u32, usize)> = Partition::all_up_to(max_size)
        .into_iter()
        .flat_map(|l| (1..=r_max).flat_map(move |r| [0usize, 1].map(|e| (l.clone(), r, l.len() + r as usize + e))))
        .collect();
    let results = cases
        .par_iter()
        .map(|(lambda, r, k)| -> Result<RatFun> {
            let base = a_coeff_closed(lambda, *k)?;
            let rho = rho_of(lambda, *k);
            let mut acc = RatFun::zero();
            for i in 0..*k {
                let mut parts: Vec<i64> = (1..=*k).map(|j| lambda.part(j) as i64).collect();
                parts[i] += *r as i64;
                let a = a_coeff_tuple(&parts)?;
                if a.is_zero() {
                    continue;
                }
                let w = RatFun::linear(Var::N, rho[i] + *r as i64, 1);
                acc = acc.add(&w.mul(&a));
            }
            Ok(acc.div(&base)?)
        })
        .collect::<Result<Vec<_>>>()?;
    for ((lambda, r, k), got) in cases.iter().zip(results) {
        let expected = if *r == 1 { RatFun::from_rat(&rat(1, 2)) } else { RatFun::zero() };
        ch.compare(lambda.size(), format!("lambda={lambda} r={r} k={k}"), &expected, &got);
    }
    Ok(ch.finish())
}

/// Agreement of the definition of `a_λ(n)` with the product formula for
/// `ℓ(λ) <= k <= ℓ(λ)+2`, antisymmetry in `ρ`, and the relation between
/// `o`, `so` and `sp` dimensions, for `|λ| <= max_size`.
pub fn check_dimensions(max_size: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("orthogonal dimensions", "o, so, sp dimensions and a_lambda(n)").param("max_size", max_size);
    let lambdas = Partition::all_up_to(max_size);
    let rows = lambdas
        .par_iter()
        .map(|lambda| -> Result<Vec<(String, RatFun, RatFun)>> {
            let mut out = Vec::new();
            let def = a_coeff_def(lambda)?;
            for k in lambda.len()..=lambda.len() + 2 {
                out.push((format!("a_{lambda} k={k}"), def.clone(), a_coeff_closed(lambda, k)?));
            }
            let k = lambda.len() + 2;
            let parts: Vec<i64> = (1..=k).map(|i| lambda.part(i) as i64).collect();
            for i in 0..k - 1 {
                // Swapping ρ_i and ρ_{i+1} means λ_i ↦ λ_{i+1} - 1, λ_{i+1} ↦ λ_i + 1.
                let mut q = parts.clone();
                q[i] = parts[i + 1] - 1;
                q[i + 1] = parts[i] + 1;
                if q[i] < 0 {
                    continue;
                }
                out.push((format!("a antisymmetry {lambda} swap {i}"), def.neg(), a_coeff_tuple(&q)?));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    for (lambda, row) in lambdas.iter().zip(rows) {
        for (what, e, g) in row {
            ch.compare(lambda.size(), what, &e, &g);
        }
    }
    for lambda in &lambdas {
        let o = ortho_dim(lambda);
        let l = lambda.len().max(1);
        for n in l..=l + 3 {
            let so = so_dim(lambda, n)?;
            let expected = if lambda.len() == n { so * int(2) } else { so };
            let got = o.eval(&int(2 * n as i64));
            ch.compare(lambda.size(), format!("o_{lambda}(1^{})", 2 * n), &expected, &got);
            let sp = sp_dim(lambda).eval(&[(Var::N, int(n as i64))])?;
            ch.compare(lambda.size(), format!("sp_{lambda}(1^{})", 2 * n), &sp_dim_weyl(lambda, n)?, &sp);
        }
    }
    Ok(ch.finish())
}

/// `τ` at `b = 1` over `Q(N)` against `Σ t^n Σ_λ s_λ(p/2) / (hook_λ^2 o_λ(1^N))`.
pub fn check_schur_expansion(n_max: u32) -> Result<CheckReport> {
    let tau = expand_tau_symbolic(n_max, Param::N)?;
    let mut ch = Checker::new("schur expansion b=1", "tau_{b=1} = sum s_lambda(p/2)/(hook^2 o_lambda(1^N))")
        .param("n_max", n_max)
        .param("mode", "symbolic b,N specialized at b=1");
    for n in 0..=n_max {
        let lhs = specialize_b(tau.slice(n), &int(1))?;
        let mut rhs = SymFun::zero();
        for lambda in Partition::all(n) {
            let d = ortho_dim(&lambda);
            let w = d.recip_scaled(1, &BigRat::from_integer(d.hook.clone()).recip())?;
            rhs = rhs.add(&schur_half(&lambda).scale(&w));
        }
        compare_slices(&mut ch, n, &rhs, &lhs);
    }
    Ok(ch.finish())
}

fn compare_slices(ch: &mut Checker, n: u32, expected: &SymFun<RatFun>, got: &SymFun<RatFun>) {
    let mut keys: Vec<&Partition> = expected.iter().map(|(m, _)| m).chain(got.iter().map(|(m, _)| m)).collect();
    keys.sort();
    keys.dedup();
    if keys.is_empty() {
        ch.compare(n, "*", &0, &0);
    }
    for mu in keys {
        ch.compare(n, mu, &expected.coeff(mu), &got.coeff(mu));
    }
}

/// `ω_2(p_r) = 2(-1)^{r-1} p_r`.
pub fn omega2<C: Field>(f: &SymFun<C>) -> SymFun<C> {
    f.rescale_p(|r| C::from_int(if r % 2 == 1 { 2 } else { -2 }))
}

/// Right-hand side used for the Schur expansion at `b = -1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymplecticForm {
    /// `Σ (4t)^n Σ_λ s_λ(p) / (hook_λ^2 sp_λ(1^{2N}))`, equivalently
    /// `Σ (-4t)^n Σ_λ s_λ(p) / (hook_λ^2 o_{λ^t}(1^{-2N}))`.
    Symplectic,
    /// `Σ (4t)^n Σ_λ s_λ(p) / (hook_λ^2 o_{λ^t}(1^{2N}))`.
    AsPrinted,
}

/// `[t^n]` of the Schur side at `b = -1/2`.
pub fn symplectic_slice(n: u32, form: SymplecticForm) -> Result<SymFun<RatFun>> {
    let mut out = SymFun::zero();
    for lambda in Partition::all(n) {
        let d = ortho_dim(&lambda.conjugate());
        let h = lambda.hook_product();
        let mut c = BigRat::new(BigInt::from(4).pow(n) * &d.hook, h.clone() * h);
        let k = match form {
            SymplecticForm::AsPrinted => 2,
            SymplecticForm::Symplectic => {
                if n % 2 == 1 {
                    c = -c;
                }
                -2
            }
        };
        let s: SymFun<RatFun> = schur(&lambda);
        out = out.add(&s.scale(&d.recip_scaled(k, &c)?));
    }
    Ok(out)
}

/// `τ` at `b = -1/2` against its Schur expansion through `t^{n_max}`.
pub fn check_symplectic_expansion(n_max: u32, form: SymplecticForm) -> Result<CheckReport> {
    let tau = expand_tau_symbolic(n_max, Param::N)?;
    let b = rat(-1, 2);
    let mut ch = Checker::new("schur expansion b=-1/2", "tau_{b=-1/2} = sum (4t)^n s_lambda(p)/(hook^2 sp_lambda(1^{2N}))")
        .param("n_max", n_max)
        .param("form", format!("{form:?}"))
        .param("mode", "symbolic b,N specialized at b=-1/2");
    for n in 0..=n_max {
        let lhs = specialize_b(tau.slice(n), &b)?;
        compare_slices(&mut ch, n, &symplectic_slice(n, form)?, &lhs);
    }
    Ok(ch.finish())
}

/// The duality between `b = 1` and `b = -1/2` for `|λ| <= max_size`:
/// `ω_2(s_λ(p/2)) = s_{λ^t}(p)`, `ω_2(J^{(1)}_λ) = 2^{|λ|} J^{(-1/2)}_{λ^t}`,
/// `j^{(1)}_λ = 4^{|λ|} j^{(-1/2)}_{λ^t}` and
/// `∏_{□∈λ} (N + c_1(□)) = ∏_{□∈λ^t} (N - 2 c_{-1/2}(□))`.
pub fn check_omega_duality(max_size: u32) -> Result<CheckReport> {
    let b = rat(-1, 2);
    let mut ch = Checker::new("omega_2 duality", "omega_2 exchanges b=1 and b=-1/2").param("max_size", max_size);
    let sympl = JackTable::new(b.clone());
    let one = int(1);
    let nvar = RatFun::var(Var::N);
    for lambda in Partition::all_up_to(max_size) {
        let n = lambda.size();
        let conj = lambda.conjugate();
        let s_conj: SymFun<RatFun> = schur(&conj);
        compare_slices(&mut ch, n, &s_conj, &omega2(&schur_half(&lambda)));
        let z = zonal_table().jack(&lambda)?;
        let j = sympl.jack(&conj)?;
        let scale = BigRat::from_integer(BigInt::from(2).pow(n));
        compare_slices(&mut ch, n, &j.scale(&scale).map(RatFun::from_rat), &omega2(&z).map(RatFun::from_rat));
        let j1 = hooks(&lambda, &one).j;
        let j2 = hooks(&conj, &b).j * BigRat::from_integer(BigInt::from(4).pow(n));
        ch.compare(n, format!("j_{lambda} duality"), &j2, &j1);
        let mut left = RatFun::one();
        for (r, c) in lambda.boxes() {
            left = left.mul(&nvar.add(&RatFun::from_rat(&content(&one, r, c))));
        }
        let mut right = RatFun::one();
        for (r, c) in conj.boxes() {
            right = right.mul(&nvar.sub(&RatFun::from_rat(&content(&b, r, c).mul_int(2))));
        }
        ch.compare(n, format!("content product {lambda} duality"), &right, &left);
    }
    Ok(ch.finish())
}

/// `ω_λ(μ) = [p_μ] Z_λ · 2^{ℓ(μ)} z_μ / |H_m|` with `|H_m| = 2^m m!`, so that
/// `ω_λ(1^m) = 1`.
pub fn zonal_spherical(lambda: &Partition, mu: &Partition) -> Result<BigRat> {
    let z = zonal_table().jack(lambda)?;
    let c = z.coeff(mu);
    let h = BigInt::from(2).pow(mu.size()) * factorial(mu.size() as i64);
    Ok(c * BigRat::new(BigInt::from(2).pow(mu.len() as u32) * mu.z(), h))
}

/// `G_{λ,γ} = Σ_μ (m!/z_μ) ω_λ(μ) χ_γ(μ)`.
pub fn g_coeff(lambda: &Partition, gamma: &Partition) -> Result<BigRat> {
    let m = lambda.size();
    let mf = factorial(m as i64);
    let mut acc = <BigRat as Zero>::zero();
    for mu in Partition::all(m) {
        let chi = char_sym(gamma, &mu);
        if chi.is_zero() {
            continue;
        }
        acc += zonal_spherical(lambda, &mu)? * BigRat::new(&mf * chi, mu.z());
    }
    Ok(acc)
}

/// `Σ_{λ⊢m} χ_{2λ}(1^{2m}) G_{λ,γ} / [N]^{(2)}_λ = (2m)!/(2^m m!) · χ_γ(1^m) / {N}_γ`
/// for every `γ ⊢ m`, in `Q(N)`.
pub fn check_oliveira_novaes(m: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("zonal spherical sum", "sum_lambda chi_{2 lambda} G_{lambda,gamma}/[N]^(2)_lambda").param("m", m);
    let one = int(1);
    let lambdas = Partition::all(m);
    let brackets = lambdas
        .iter()
        .map(|lambda| {
            let chi2 = BigRat::from_integer(lambda.doubled().dimension());
            recip_linear(&chi2, lambda.boxes().map(|(r, c)| (1, content(&one, r, c).to_integer().try_into().expect("small content"))))
        })
        .collect::<Result<Vec<_>>>()?;
    let mf = factorial(m as i64);
    let front = BigRat::new(factorial(2 * m as i64), BigInt::from(2).pow(m) * &mf);
    for gamma in &lambdas {
        let mut lhs = RatFun::zero();
        for (lambda, w) in lambdas.iter().zip(&brackets) {
            lhs = lhs.add(&w.mul(&RatFun::from_rat(&g_coeff(lambda, gamma)?)));
        }
        let o = ortho_dim(gamma);
        let chi = BigRat::from_integer(gamma.dimension());
        // {N}_γ = (m!/χ_γ(1^m)) o_γ(1^N) = ∏ (N + s).
        let rhs = recip_linear(&(front.clone() * chi), o.shifts.iter().map(|&s| (1, s)))?;
        ch.compare(m, gamma, &rhs, &lhs);
    }
    Ok(ch.finish())
}

/// `L'_r s^{(ρ)}(p/2) = Σ_{i<=k-r} (n + ρ_i) s^{ρ - r ε_i}(p/2)` at `b = 1`,
/// `u^{-1} = 2n`, for `|λ| <= max_size` padded to `k = ℓ(λ) + r + 1`.
pub fn check_virasoro_on_schur(max_size: u32, r_max: u32) -> Result<CheckReport> {
    let mut ch = Checker::new("virasoro on scaled schur", "L_r s^(rho)(p/2) at b=1, u^-1 = 2n")
        .param("max_size", max_size)
        .param("r_max", r_max);
    let b = RatFun::one();
    let u_inv = RatFun::linear(Var::N, 0, 2);
    for lambda in Partition::all_up_to(max_size) {
        for r in 1..=r_max {
            let k = lambda.len() + r as usize + 1;
            let rho = rho_of(&lambda, k);
            let got = virasoro_prime(r, &schur_rho_half(&rho), &b, &u_inv);
            let mut expected = SymFun::zero();
            for i in 0..k - r as usize {
                let mut shifted = rho.clone();
                shifted[i] -= r as i64;
                let w = RatFun::linear(Var::N, rho[i], 1);
                expected = expected.add(&schur_rho_half(&shifted).scale(&w));
            }
            compare_slices(&mut ch, lambda.size(), &expected, &got);
        }
    }
    Ok(ch.finish())
}
