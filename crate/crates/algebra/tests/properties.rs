use monohurwitz_algebra::{gcd::gcd, int, rat, BigRat, Field, GradedSeries, MPoly, Mono, Partition, RatFun, SymFun, Var};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, vars: &[Var], max_deg: u32, terms: usize) -> MPoly {
    let mut t = Vec::new();
    for _ in 0..terms {
        let mut e = [0u32; 3];
        for &v in vars {
            e[v.index()] = rng.gen_range(0..=max_deg);
        }
        t.push((Mono::from_exps(e), BigInt::from(rng.gen_range(-9i64..=9))));
    }
    MPoly::from_terms(t)
}

fn random_ratfun(rng: &mut ChaCha8Rng) -> RatFun {
    let vars = [Var::B, Var::U];
    let num = random_poly(rng, &vars, 2, 3);
    let mut den = random_poly(rng, &vars, 2, 2);
    if den.is_zero() {
        den = MPoly::one();
    }
    RatFun::new(num, den).unwrap()
}

fn eval_b(f: &RatFun, b: &BigRat, u: &BigRat) -> Option<BigRat> {
    f.eval(&[(Var::B, b.clone()), (Var::U, u.clone())]).ok()
}

#[test]
fn evaluation_commutes_with_addition() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let b = rat(2, 7);
    let u = rat(-3, 5);
    for _ in 0..100 {
        let f = random_ratfun(&mut rng);
        let g = random_ratfun(&mut rng);
        if let (Some(x), Some(y)) = (eval_b(&f, &b, &u), eval_b(&g, &b, &u)) {
            assert_eq!(eval_b(&f.add(&g), &b, &u), Some(x + y));
        }
    }
}

#[test]
fn field_axioms_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let (f, g, h) = (random_ratfun(&mut rng), random_ratfun(&mut rng), random_ratfun(&mut rng));
        assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        assert!(f.sub(&f).is_zero());
        if !f.is_zero() {
            assert!(f.div(&f).unwrap().is_one());
        }
    }
}

#[test]
fn evaluation_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let f = random_ratfun(&mut rng);
        let g = random_ratfun(&mut rng);
        let b = rat(rng.gen_range(-20..20), rng.gen_range(1..9));
        let u = rat(rng.gen_range(-20..20), rng.gen_range(1..9));
        if let (Some(x), Some(y)) = (eval_b(&f, &b, &u), eval_b(&g, &b, &u)) {
            assert_eq!(eval_b(&f.mul(&g), &b, &u), Some(x * y));
        }
    }
}

#[test]
fn normalization_is_canonical_under_integer_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let num = random_poly(&mut rng, &[Var::B, Var::N], 3, 4);
        let den = random_poly(&mut rng, &[Var::B, Var::N], 3, 3);
        if den.is_zero() {
            continue;
        }
        let f = RatFun::new(num.clone(), den.clone()).unwrap();
        let k = BigInt::from(rng.gen_range(1i64..50) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let g = RatFun::new(num.scale(&k), den.scale(&k)).unwrap();
        assert_eq!((f.numer(), f.denom()), (g.numer(), g.denom()));
        assert!(f.denom().lc_sign_positive());
    }
}

/// Euclid over the rationals on univariate polynomials, returned monic.
fn rational_gcd(a: &MPoly, b: &MPoly, v: Var) -> Vec<BigRat> {
    let to_vec = |p: &MPoly| -> Vec<BigRat> {
        p.coeffs_in(v).iter().map(|c| BigRat::from_integer(c.constant_value().unwrap())).collect()
    };
    let trim = |mut p: Vec<BigRat>| {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    };
    let (mut x, mut y) = (trim(to_vec(a)), trim(to_vec(b)));
    while !y.is_empty() {
        let mut r = x.clone();
        while r.len() >= y.len() {
            let q = r.last().unwrap() / y.last().unwrap();
            let shift = r.len() - y.len();
            for (i, c) in y.iter().enumerate() {
                r[i + shift] -= &q * c;
            }
            r = trim(r);
            if r.is_empty() {
                break;
            }
        }
        x = std::mem::replace(&mut y, r);
    }
    let lead = x.last().unwrap().clone();
    x.into_iter().map(|c| c / &lead).collect()
}

#[test]
fn univariate_gcd_matches_rational_euclid() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let f = random_poly(&mut rng, &[Var::N], 3, 3);
        let g = random_poly(&mut rng, &[Var::N], 3, 3);
        let h = random_poly(&mut rng, &[Var::N], 2, 3);
        if f.is_constant() || g.is_constant() || h.is_zero() {
            continue;
        }
        let a = &f * &h;
        let b = &g * &h;
        let ours = gcd(&a, &b);
        let ours_monic: Vec<BigRat> = {
            let cs: Vec<BigRat> =
                ours.coeffs_in(Var::N).iter().map(|c| BigRat::from_integer(c.constant_value().unwrap())).collect();
            let lead = cs.last().unwrap().clone();
            cs.into_iter().map(|c| c / &lead).collect()
        };
        assert_eq!(ours_monic, rational_gcd(&a, &b, Var::N));
    }
}

#[test]
fn multivariate_gcd_recovers_planted_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..60 {
        let vars = [Var::B, Var::U, Var::N];
        let f = random_poly(&mut rng, &vars, 2, 3);
        let g = random_poly(&mut rng, &vars, 2, 3);
        let h = random_poly(&mut rng, &vars, 2, 3);
        if f.is_zero() || g.is_zero() || h.is_zero() {
            continue;
        }
        let d = gcd(&(&f * &h), &(&g * &h));
        assert!((&f * &h).div_exact(&d).is_some());
        assert!((&g * &h).div_exact(&d).is_some());
        // h divides the gcd up to its integer content.
        let ph = h.div_int(&h.content());
        assert!(d.div_exact(&ph).is_some(), "{d} not divisible by {ph}");
    }
}

fn random_series(rng: &mut ChaCha8Rng, precision: u32) -> GradedSeries<BigRat> {
    let mut f = SymFun::one();
    for mu in Partition::all_up_to(precision).into_iter().skip(1) {
        if rng.gen_bool(0.7) {
            f.add_term(mu, rat(rng.gen_range(-5..=5), rng.gen_range(1..4)));
        }
    }
    GradedSeries::from_symfun(&f, precision)
}

#[test]
fn exp_and_log_are_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let s = random_series(&mut rng, 5);
        let l = s.log().unwrap();
        assert_eq!(l.exp().unwrap(), s);
        assert_eq!(l.exp().unwrap().log().unwrap(), l);
    }
}

#[test]
fn log_turns_products_into_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let s = random_series(&mut rng, 4);
    let t = random_series(&mut rng, 4);
    assert_eq!(s.mul(&t).log().unwrap(), s.log().unwrap().add(&t.log().unwrap()));
}

#[test]
fn falling_factorial_evaluation() {
    let n = RatFun::var(Var::N);
    let mut f = RatFun::one();
    for k in 0..4 {
        f = f.mul(&n.scale_int(2).add(&RatFun::from_int(2 - k)));
        f = f.mul(&n.scale_int(2).add(&RatFun::from_int(-k)));
    }
    assert_eq!(f.eval(&[(Var::N, int(3))]).unwrap(), int(604800));
}

proptest! {
    #[test]
    fn rational_field_ops(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let x = rat(a, b);
        let y = rat(c, d);
        let fx = RatFun::from_rat(&x);
        let fy = RatFun::from_rat(&y);
        prop_assert_eq!(fx.add(&fy).as_constant().unwrap(), &x + &y);
        prop_assert_eq!(fx.mul(&fy).as_constant().unwrap(), &x * &y);
        if !y.is_zero() {
            prop_assert_eq!(Field::div(&x, &y).unwrap(), &x / &y);
        }
    }

    #[test]
    fn parse_display_round_trip(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_ratfun(&mut rng);
        prop_assert_eq!(monohurwitz_algebra::parse_ratfun(&f.to_string()).unwrap(), f);
    }
}
