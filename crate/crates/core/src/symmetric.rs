//! Box statistics, the deformed scalar product, the Laplace–Beltrami operator
//! and the classical bases: monomial, Schur, Jack and zonal functions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use monohurwitz_algebra::{int, rat, BigRat, Field, Partition, RatFun, SymFun, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};
use crate::linalg::Matrix;
use crate::report::{CheckReport, Checker};

/// `c_b(□) = (1+b)(col-1) - (row-1)`.
pub fn content<C: Field>(b: &C, row: u32, col: u32) -> C {
    C::one().add(b).mul_int(col as i64 - 1).sub(&C::from_int(row as i64 - 1))
}

pub fn contents<C: Field>(lambda: &Partition, b: &C) -> Vec<C> {
    lambda.boxes().map(|(r, c)| content(b, r, c)).collect()
}

/// Sum of the `b`-contents, the `D_b` eigenvalue of `J_λ`.
pub fn content_sum<C: Field>(lambda: &Partition, b: &C) -> C {
    contents(lambda, b).iter().fold(C::zero(), |acc, c| acc.add(c))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hooks<C> {
    pub hook: C,
    pub hook_prime: C,
    pub j: C,
}

/// `hook_b(λ) = ∏ ((1+b)a + l + 1)`, `hook'_b(λ) = ∏ ((1+b)a + l + 1 + b)`
/// and their product `j_λ`.
pub fn hooks<C: Field>(lambda: &Partition, b: &C) -> Hooks<C> {
    let one_b = C::one().add(b);
    let mut hook = C::one();
    let mut hook_prime = C::one();
    for (r, c) in lambda.boxes() {
        let a = one_b.mul_int(lambda.arm(r, c) as i64);
        let l = C::from_int(lambda.leg(r, c) as i64);
        hook = hook.mul(&a.add(&l).add(&C::one()));
        hook_prime = hook_prime.mul(&a.add(&l).add(&one_b));
    }
    let j = hook.mul(&hook_prime);
    Hooks { hook, hook_prime, j }
}

/// `(1+b)^{ℓ(μ)} z_μ = <p_μ, p_μ>_b`.
pub fn p_norm<C: Field>(mu: &Partition, b: &C) -> C {
    C::one().add(b).pow(mu.len() as u32).mul(&C::from_bigint(&mu.z()))
}

/// `<f, g>_b = Σ_μ f_μ g_μ (1+b)^{ℓ(μ)} z_μ`.
pub fn inner_product<C: Field>(f: &SymFun<C>, g: &SymFun<C>, b: &C) -> C {
    let mut acc = C::zero();
    for (mu, x) in f.iter() {
        if let Some(y) = g.get(mu) {
            acc = acc.add(&x.mul(y).mul(&p_norm(mu, b)));
        }
    }
    acc
}

fn replace_parts(mu: &Partition, remove: &[usize], add: &[u32]) -> Partition {
    let mut parts: Vec<u32> =
        mu.parts().iter().enumerate().filter(|(i, _)| !remove.contains(i)).map(|(_, &p)| p).collect();
    parts.extend_from_slice(add);
    Partition::from_parts(parts)
}

/// `D_b = ½[(1+b) Σ p_{i+j} p_i^* p_j^* + Σ p_i p_j p_{i+j}^* + b Σ (i-1) p_i p_i^*]`.
pub fn laplace_beltrami<C: Field>(f: &SymFun<C>, b: &C) -> SymFun<C> {
    let one_b = C::one().add(b);
    let half = C::from_rat(&rat(1, 2));
    let mut out = SymFun::zero();
    for (mu, c) in f.iter() {
        let parts = mu.parts();
        let mut diag = 0i64;
        for (x, &i) in parts.iter().enumerate() {
            diag += (i as i64) * (i as i64 - 1);
            for (y, &j) in parts.iter().enumerate().skip(x + 1) {
                let w = one_b.mul_int((i * j) as i64).mul(c);
                out.add_term(replace_parts(mu, &[x, y], &[i + j]), w);
            }
            for s in 1..i {
                let w = half.mul_int(i as i64).mul(c);
                out.add_term(replace_parts(mu, &[x], &[s, i - s]), w);
            }
        }
        if diag != 0 {
            out.add_term(mu.clone(), b.mul(&half).mul_int(diag).mul(c));
        }
    }
    out
}

/// `h_k(x_1, ..., x_m)`.
pub fn hk_of_multiset<C: Field>(k: u32, xs: &[C]) -> C {
    let mut h = vec![C::zero(); k as usize + 1];
    h[0] = C::one();
    for x in xs {
        for j in 1..=k as usize {
            let v = h[j].add(&x.mul(&h[j - 1]));
            h[j] = v;
        }
    }
    h.pop().expect("k + 1 entries")
}

/// Partitions of `n` with the transition matrices between `p` and `m`.
pub struct DegreeBasis {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_ν = Σ_μ p_to_m[ν][μ] m_μ`.
    pub p_to_m: Vec<Vec<BigInt>>,
    /// `m_μ = Σ_ν m_to_p[μ][ν] p_ν`.
    pub m_to_p: Vec<Vec<BigRat>>,
}

fn count_fillings(nu: &[u32], caps: &mut [u32]) -> u64 {
    let Some((&first, rest)) = nu.split_first() else {
        return u64::from(caps.iter().all(|&c| c == 0));
    };
    let mut total = 0;
    for i in 0..caps.len() {
        if caps[i] >= first {
            caps[i] -= first;
            total += count_fillings(rest, caps);
            caps[i] += first;
        }
    }
    total
}

impl DegreeBasis {
    fn build(n: u32) -> DegreeBasis {
        let parts = Partition::all(n);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let size = parts.len();
        let p_to_m: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|nu| {
                parts
                    .iter()
                    .map(|mu| {
                        let mut caps = mu.parts().to_vec();
                        BigInt::from(count_fillings(nu.parts(), &mut caps))
                    })
                    .collect()
            })
            .collect();
        // p_to_m is lower triangular in this order; invert by substitution.
        let mut m_to_p = vec![vec![<BigRat as Zero>::zero(); size]; size];
        for i in 0..size {
            let d = BigRat::from_integer(p_to_m[i][i].clone());
            for j in 0..=i {
                let mut acc = if i == j { <BigRat as One>::one() } else { <BigRat as Zero>::zero() };
                for k in j..i {
                    if !p_to_m[i][k].is_zero() {
                        acc -= BigRat::from_integer(p_to_m[i][k].clone()) * &m_to_p[k][j];
                    }
                }
                m_to_p[i][j] = acc / &d;
            }
        }
        DegreeBasis { parts, index, p_to_m, m_to_p }
    }

    pub fn get(n: u32) -> Arc<DegreeBasis> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(b) = cache.lock().expect("basis cache").get(&n) {
            return b.clone();
        }
        let built = Arc::new(DegreeBasis::build(n));
        cache.lock().expect("basis cache").entry(n).or_insert(built).clone()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// `m_λ` in the power-sum basis.
pub fn monomial<C: Field>(lambda: &Partition) -> SymFun<C> {
    let basis = DegreeBasis::get(lambda.size());
    let row = &basis.m_to_p[basis.index[lambda]];
    SymFun::from_terms(basis.parts.iter().zip(row).map(|(nu, c)| (nu.clone(), C::from_rat(c))))
}

/// Coefficients of a homogeneous `f` in the monomial basis.
pub fn to_monomial_basis<C: Field>(f: &SymFun<C>, n: u32) -> Vec<C> {
    let basis = DegreeBasis::get(n);
    let mut out = vec![C::zero(); basis.len()];
    for (nu, c) in f.iter() {
        assert_eq!(nu.size(), n, "to_monomial_basis needs a homogeneous function");
        let row = &basis.p_to_m[basis.index[nu]];
        for (k, l) in row.iter().enumerate() {
            if !l.is_zero() {
                out[k] = out[k].add(&c.mul(&C::from_bigint(l)));
            }
        }
    }
    out
}

fn beta_set(lambda: &Partition) -> Vec<i64> {
    let l = lambda.len() as i64;
    lambda.parts().iter().enumerate().map(|(i, &p)| p as i64 + l - 1 - i as i64).collect()
}

fn mn_rec(beta: &[i64], rims: &[u32]) -> i64 {
    let Some((&k, rest)) = rims.split_first() else {
        return 1;
    };
    let k = k as i64;
    let mut total = 0;
    for (idx, &x) in beta.iter().enumerate() {
        let y = x - k;
        if y < 0 || beta.contains(&y) {
            continue;
        }
        let between = beta.iter().filter(|&&z| z > y && z < x).count();
        let mut next = beta.to_vec();
        next[idx] = y;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn_rec(&next, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    total
}

/// `χ_λ(μ)` by the Murnaghan–Nakayama rule.
pub fn char_sym(lambda: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(lambda.size(), mu.size(), "character needs partitions of the same size");
    BigInt::from(mn_rec(&beta_set(lambda), mu.parts()))
}

/// `s_λ = Σ_μ χ_λ(μ) p_μ / z_μ`.
pub fn schur<C: Field>(lambda: &Partition) -> SymFun<C> {
    SymFun::from_terms(Partition::all(lambda.size()).into_iter().map(|mu| {
        let c = BigRat::new(char_sym(lambda, &mu), mu.z());
        (mu, C::from_rat(&c))
    }))
}

/// Coefficients in the Schur basis, using `<p_μ, s_λ> = χ_λ(μ)`.
pub fn to_schur_basis<C: Field>(f: &SymFun<C>) -> BTreeMap<Partition, C> {
    let mut out: BTreeMap<Partition, C> = BTreeMap::new();
    for (mu, c) in f.iter() {
        for lambda in Partition::all(mu.size()) {
            let chi = char_sym(&lambda, mu);
            if chi.is_zero() {
                continue;
            }
            let term = c.mul(&C::from_bigint(&chi));
            let entry = out.entry(lambda).or_insert_with(C::zero);
            *entry = entry.add(&term);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Jack functions `J_λ^{(1+b)}` for a fixed value (or symbol) `b`, memoized.
pub struct JackTable<C: Field> {
    b: C,
    lb: Mutex<HashMap<u32, Arc<Matrix<C>>>>,
    jacks: Mutex<HashMap<Partition, Arc<SymFun<C>>>>,
}

impl JackTable<RatFun> {
    /// Jack functions over `Q(b)`.
    pub fn symbolic() -> Self {
        JackTable::new(RatFun::var(Var::B))
    }
}

impl JackTable<BigRat> {
    /// Zonal polynomials, `b = 1`.
    pub fn zonal() -> Self {
        JackTable::new(int(1))
    }
}

impl<C: Field> JackTable<C> {
    pub fn new(b: C) -> Self {
        JackTable { b, lb: Mutex::new(HashMap::new()), jacks: Mutex::new(HashMap::new()) }
    }

    pub fn b(&self) -> &C {
        &self.b
    }

    pub fn hooks(&self, lambda: &Partition) -> Hooks<C> {
        hooks(lambda, &self.b)
    }

    /// `D_b` in the monomial basis of degree `n`: `D m_μ = Σ_κ M[μ][κ] m_κ`.
    pub fn lb_matrix(&self, n: u32) -> Arc<Matrix<C>> {
        if let Some(m) = self.lb.lock().expect("lb cache").get(&n) {
            return m.clone();
        }
        let basis = DegreeBasis::get(n);
        let size = basis.len();
        // T[ν][κ]: coefficient of m_κ in D p_ν.
        let t: Matrix<C> =
            basis.parts.iter().map(|nu| to_monomial_basis(&laplace_beltrami(&SymFun::p(nu.clone()), &self.b), n)).collect();
        let mut m = vec![vec![C::zero(); size]; size];
        for (mu, row) in m.iter_mut().enumerate() {
            for (nu, c) in basis.m_to_p[mu].iter().enumerate() {
                if Zero::is_zero(c) {
                    continue;
                }
                let c = C::from_rat(c);
                for (k, x) in t[nu].iter().enumerate() {
                    if !x.is_zero() {
                        row[k] = row[k].add(&c.mul(x));
                    }
                }
            }
        }
        let m = Arc::new(m);
        self.lb.lock().expect("lb cache").entry(n).or_insert(m).clone()
    }

    /// `J_λ` in the power-sum basis, by solving the triangular eigenvalue
    /// system of `D_b` in the monomial basis.
    pub fn jack(&self, lambda: &Partition) -> Result<Arc<SymFun<C>>> {
        if let Some(j) = self.jacks.lock().expect("jack cache").get(lambda) {
            return Ok(j.clone());
        }
        let j = Arc::new(self.jack_eigen(lambda)?);
        Ok(self.jacks.lock().expect("jack cache").entry(lambda.clone()).or_insert(j).clone())
    }

    fn jack_eigen(&self, lambda: &Partition) -> Result<SymFun<C>> {
        let n = lambda.size();
        let basis = DegreeBasis::get(n);
        let d = self.lb_matrix(n);
        let top = basis.index[lambda];
        let e = d[top][top].clone();
        let mut c = vec![C::zero(); basis.len()];
        c[top] = self.hooks(lambda).hook;
        for j in top + 1..basis.len() {
            if !lambda.dominates(&basis.parts[j]) {
                continue;
            }
            let mut acc = C::zero();
            for i in top..j {
                if !c[i].is_zero() && !d[i][j].is_zero() {
                    acc = acc.add(&c[i].mul(&d[i][j]));
                }
            }
            let gap = e.sub(&d[j][j]);
            if gap.is_zero() {
                return Err(CoreError::SingularSystem(format!("J_{lambda}")));
            }
            c[j] = acc.div(&gap)?;
        }
        Ok(from_monomial_coords(&basis, &c))
    }

    /// `J_λ` by Gram–Schmidt on the monomial basis, listed from the smallest
    /// partition in reverse lexicographic order. Independent of [`Self::jack`].
    pub fn jack_gram_schmidt(&self, lambda: &Partition) -> Result<SymFun<C>> {
        let n = lambda.size();
        let basis = DegreeBasis::get(n);
        let size = basis.len();
        let weights: Vec<C> = basis.parts.iter().map(|nu| p_norm(nu, &self.b)).collect();
        let m: Vec<Vec<C>> = basis.m_to_p.iter().map(|row| row.iter().map(C::from_rat).collect()).collect();
        let mut gram = vec![vec![C::zero(); size]; size];
        for i in 0..size {
            for j in i..size {
                let mut acc = C::zero();
                for k in 0..size {
                    if !m[i][k].is_zero() && !m[j][k].is_zero() {
                        acc = acc.add(&m[i][k].mul(&m[j][k]).mul(&weights[k]));
                    }
                }
                gram[i][j] = acc.clone();
                gram[j][i] = acc;
            }
        }
        let pair = |x: &[C], y: &[C]| -> C {
            let mut acc = C::zero();
            for i in 0..size {
                if x[i].is_zero() {
                    continue;
                }
                for j in 0..size {
                    if !y[j].is_zero() && !gram[i][j].is_zero() {
                        acc = acc.add(&x[i].mul(&y[j]).mul(&gram[i][j]));
                    }
                }
            }
            acc
        };
        let top = basis.index[lambda];
        let mut done: Vec<(Vec<C>, C)> = Vec::new();
        for idx in (top..size).rev() {
            let mut v = vec![C::zero(); size];
            v[idx] = C::one();
            let mut out = v.clone();
            for (q, norm) in &done {
                let coef = pair(&v, q).div(norm)?;
                if coef.is_zero() {
                    continue;
                }
                for k in 0..size {
                    if !q[k].is_zero() {
                        out[k] = out[k].sub(&coef.mul(&q[k]));
                    }
                }
            }
            let norm = pair(&out, &out);
            if norm.is_zero() {
                return Err(CoreError::SingularSystem(format!("Gram-Schmidt at {}", basis.parts[idx])));
            }
            done.push((out, norm));
        }
        let (p, _) = done.pop().expect("at least the target vector");
        let hook = self.hooks(lambda).hook;
        let coords: Vec<C> = p.iter().map(|x| x.mul(&hook)).collect();
        Ok(from_monomial_coords(&basis, &coords))
    }

    /// `θ_μ(λ) = [p_μ] J_λ`.
    pub fn theta(&self, mu: &Partition, lambda: &Partition) -> Result<C> {
        Ok(self.jack(lambda)?.coeff(mu))
    }
}

fn from_monomial_coords<C: Field>(basis: &DegreeBasis, c: &[C]) -> SymFun<C> {
    let mut acc = vec![C::zero(); basis.len()];
    for (mu, x) in c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (nu, y) in basis.m_to_p[mu].iter().enumerate() {
            if !Zero::is_zero(y) {
                acc[nu] = acc[nu].add(&x.mul(&C::from_rat(y)));
            }
        }
    }
    SymFun::from_terms(basis.parts.iter().cloned().zip(acc))
}

/// Specializes `b` in a function over `Q(b)` (and possibly other variables).
pub fn specialize_b(f: &SymFun<RatFun>, b: &BigRat) -> Result<SymFun<RatFun>> {
    Ok(f.try_map(|c| c.specialize(Var::B, b))?)
}

/// Converts a function with constant rational-function coefficients.
pub fn to_rational(f: &SymFun<RatFun>) -> Option<SymFun<BigRat>> {
    let mut out = SymFun::zero();
    for (mu, c) in f.iter() {
        out.add_term(mu.clone(), c.as_constant()?);
    }
    Some(out)
}

pub fn from_rational(f: &SymFun<BigRat>) -> SymFun<RatFun> {
    f.map(RatFun::from_rat)
}

/// Pieri coefficients `p_1 J_λ = Σ_{λ↗μ} c_{λ↗μ} J_μ`, by projection.
pub fn pieri_coefficients(table: &JackTable<RatFun>, lambda: &Partition) -> Result<Vec<(Partition, RatFun)>> {
    let b = table.b().clone();
    let f = table.jack(lambda)?.mul_pk(1);
    let mut out = Vec::new();
    for mu in lambda.add_box() {
        let j = table.jack(&mu)?;
        let c = inner_product(&f, &j, &b).div(&hooks(&mu, &b).j)?;
        out.push((mu, c));
    }
    Ok(out)
}

/// Orthogonality, norms, eigenvalues, the `p_{1^n}` and `p_{21^{n-2}}`
/// pairings, the Cauchy sum, the Pieri rule, the Schur limit and the
/// agreement of both constructions, for `|λ| <= n_max`.
pub fn check_jack_core(n_max: u32) -> Result<CheckReport> {
    let table = JackTable::symbolic();
    let b = RatFun::var(Var::B);
    let one_b = RatFun::one().add(&b);
    let schur_table = JackTable::new(int(0));
    let mut ch = Checker::new("jack-core", "orthogonality, norms, eigenvalues, pairings, Cauchy sum, Pieri rule")
        .param("n_max", n_max);
    for n in 1..=n_max {
        let parts = Partition::all(n);
        let mut cauchy = SymFun::zero();
        let p1n = SymFun::p(Partition::rectangle(1, n as usize));
        let p21n = (n >= 2).then(|| SymFun::p(Partition::rectangle(1, n as usize - 2).with_part(2)));
        for (x, lambda) in parts.iter().enumerate() {
            let j = table.jack(lambda)?;
            let h = hooks(lambda, &b);
            ch.compare(n, format!("<J{lambda},J{lambda}>"), &h.j, &inner_product(&j, &j, &b));
            for mu in &parts[x + 1..] {
                ch.compare(n, format!("<J{lambda},J{mu}>"), &RatFun::zero(), &inner_product(&j, &*table.jack(mu)?, &b));
            }
            let e = content_sum(lambda, &b);
            ch.compare(n, format!("D_b J{lambda}"), &j.scale(&e), &laplace_beltrami(&j, &b));
            let fact = |k: u32| RatFun::from_bigint(&(1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i)));
            ch.compare(n, format!("<J{lambda},p_1^n>"), &one_b.pow(n as i32)?.mul(&fact(n)), &inner_product(&j, &p1n, &b));
            if let Some(p21) = &p21n {
                let expected = e.mul(&one_b.pow(n as i32 - 1)?).mul(&fact(n - 2)).scale_int(2);
                ch.compare(n, format!("<J{lambda},p_21^(n-2)>"), &expected, &inner_product(&j, p21, &b));
            }
            cauchy = cauchy.add(&j.scale(&h.j.inv()?));
            ch.compare(n, format!("J{lambda} by Gram-Schmidt"), &*j, &table.jack_gram_schmidt(lambda)?);
            let s: SymFun<BigRat> = schur(lambda);
            let at_zero = schur_table.jack(lambda)?;
            ch.compare(n, format!("J{lambda} at b=0"), &s.scale(&BigRat::from_integer(lambda.hook_product())), &*at_zero);
            if n < n_max {
                let pieri = pieri_coefficients(&table, lambda)?;
                let mut rebuilt = SymFun::zero();
                for (mu, c) in &pieri {
                    rebuilt = rebuilt.add(&table.jack(mu)?.scale(c));
                }
                ch.compare(n + 1, format!("p_1 J{lambda}"), &j.mul_pk(1), &rebuilt);
            }
        }
        let expected = p1n.scale(&one_b.pow(n as i32)?.mul(&RatFun::from_bigint(&(1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i)))).inv()?);
        ch.compare(n, "sum J/j", &expected, &cauchy);
    }
    Ok(ch.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monohurwitz_algebra::part;

    fn b() -> RatFun {
        RatFun::var(Var::B)
    }

    fn p(parts: &[u32]) -> SymFun<RatFun> {
        SymFun::p(Partition::from_parts(parts.to_vec()))
    }

    #[test]
    fn scalar_product_examples() {
        assert_eq!(inner_product(&p(&[1]), &p(&[1]), &b()), RatFun::linear(Var::B, 1, 1));
        assert!(inner_product(&p(&[2]), &p(&[1, 1]), &b()).is_zero());
        let expected = RatFun::linear(Var::B, 1, 1).pow(2).unwrap().scale_int(2);
        assert_eq!(inner_product(&p(&[2, 1]), &p(&[2, 1]), &b()), expected);
    }

    #[test]
    fn laplace_beltrami_examples() {
        let one_b = RatFun::linear(Var::B, 1, 1);
        assert!(laplace_beltrami(&p(&[1]), &b()).is_zero());
        let f = p(&[1, 1]).add(&p(&[2]).scale(&one_b));
        assert_eq!(laplace_beltrami(&f, &b()), f.scale(&one_b));
        let g = p(&[1, 1]).sub(&p(&[2]));
        assert_eq!(laplace_beltrami(&g, &b()), g.neg());
    }

    #[test]
    fn hook_examples() {
        let h = hooks(&part![2], &b());
        let one_b = RatFun::linear(Var::B, 1, 1);
        assert_eq!(h.hook, RatFun::linear(Var::B, 2, 1));
        assert_eq!(h.hook_prime, one_b.pow(2).unwrap().scale_int(2));
        assert_eq!(h.j, h.hook.mul(&h.hook_prime));
        let xs = contents(&part![2], &b());
        assert_eq!(hk_of_multiset(2, &xs), one_b.pow(2).unwrap());
    }

    #[test]
    fn small_jacks() {
        let t = JackTable::symbolic();
        assert_eq!(*t.jack(&part![1]).unwrap(), p(&[1]));
        let j2 = p(&[1, 1]).add(&p(&[2]).scale(&RatFun::linear(Var::B, 1, 1)));
        assert_eq!(*t.jack(&part![2]).unwrap(), j2);
        assert_eq!(*t.jack(&part![1, 1]).unwrap(), p(&[1, 1]).sub(&p(&[2])));
        assert_eq!(t.jack_gram_schmidt(&part![2]).unwrap(), j2);
        let z = JackTable::zonal();
        assert_eq!(z.jack(&part![2]).unwrap().coeff(&part![2]), int(2));
    }

    #[test]
    fn characters() {
        assert_eq!(char_sym(&part![2], &part![1, 1]), BigInt::from(1));
        assert_eq!(char_sym(&part![1, 1], &part![2]), BigInt::from(-1));
        assert_eq!(char_sym(&part![2, 1], &part![3]), BigInt::from(-1));
        assert_eq!(char_sym(&part![3, 1, 1], &part![1, 1, 1, 1, 1]), BigInt::from(6));
        let s2: SymFun<BigRat> = schur(&part![2]);
        assert_eq!(s2.coeff(&part![1, 1]), rat(1, 2));
        assert_eq!(s2.coeff(&part![2]), rat(1, 2));
        let back = to_schur_basis(&s2);
        assert_eq!(back.len(), 1);
        assert_eq!(back[&part![2]], int(1));
    }

    #[test]
    fn monomials() {
        let m21: SymFun<BigRat> = monomial(&part![2, 1]);
        // m_{21} = p_2 p_1 - p_3
        assert_eq!(m21.coeff(&part![2, 1]), int(1));
        assert_eq!(m21.coeff(&part![3]), int(-1));
        assert_eq!(to_monomial_basis(&m21, 3), vec![int(0), int(1), int(0)]);
    }
}
