use monohurwitz_algebra::{int, rat, BigRat, Partition, RatFun, SymFun, Var};
use monohurwitz_core::symmetric::{
    char_sym, content_sum, hooks, inner_product, laplace_beltrami, schur, to_schur_basis, JackTable,
};

#[test]
fn eigen_solve_agrees_with_gram_schmidt() {
    let t = JackTable::symbolic();
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            let a = t.jack(&lambda).unwrap();
            let b = t.jack_gram_schmidt(&lambda).unwrap();
            assert_eq!(*a, b, "J_{lambda}");
        }
    }
}

#[test]
fn jacks_are_eigenfunctions_with_content_sum() {
    let t = JackTable::symbolic();
    let b = RatFun::var(Var::B);
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let j = t.jack(&lambda).unwrap();
            let lhs = laplace_beltrami(&j, &b);
            assert_eq!(lhs, j.scale(&content_sum(&lambda, &b)), "D_b J_{lambda}");
        }
    }
}

#[test]
fn jacks_are_orthogonal_with_norm_j() {
    let t = JackTable::symbolic();
    let b = RatFun::var(Var::B);
    for n in 1..=5 {
        let parts = Partition::all(n);
        for (i, x) in parts.iter().enumerate() {
            let jx = t.jack(x).unwrap();
            assert_eq!(inner_product(&jx, &jx, &b), hooks(x, &b).j, "<J_{x}, J_{x}>");
            for y in &parts[i + 1..] {
                assert!(inner_product(&jx, &t.jack(y).unwrap(), &b).is_zero(), "<J_{x}, J_{y}>");
            }
        }
    }
}

#[test]
fn b_zero_gives_hook_scaled_schur() {
    let t = JackTable::new(int(0));
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let s: SymFun<BigRat> = schur(&lambda);
            let h = BigRat::from_integer(lambda.hook_product());
            assert_eq!(*t.jack(&lambda).unwrap(), s.scale(&h), "J_{lambda} at b=0");
        }
    }
}

#[test]
fn zonal_matches_symbolic_specialization() {
    let z = JackTable::zonal();
    let t = JackTable::symbolic();
    for lambda in Partition::all(4) {
        let sym = t.jack(&lambda).unwrap();
        let spec = sym.try_map(|c| c.eval(&[(Var::B, int(1))])).unwrap();
        assert_eq!(*z.jack(&lambda).unwrap(), spec);
    }
}

#[test]
fn character_orthogonality() {
    for n in 1..=6 {
        let parts = Partition::all(n);
        for x in &parts {
            for y in &parts {
                let sum: BigRat = parts
                    .iter()
                    .map(|mu| BigRat::new(char_sym(x, mu) * char_sym(y, mu), mu.z()))
                    .fold(int(0), |a, v| a + v);
                assert_eq!(sum, if x == y { int(1) } else { int(0) });
            }
        }
    }
}

#[test]
fn schur_round_trip() {
    let f: SymFun<BigRat> = schur(&Partition::from_parts(vec![3, 1])).add(&schur(&Partition::from_parts(vec![2, 2])).scale(&rat(-2, 3)));
    let back = to_schur_basis(&f);
    assert_eq!(back.len(), 2);
    assert_eq!(back[&Partition::from_parts(vec![2, 2])], rat(-2, 3));
}

#[test]
fn jack_core_report_through_degree_6() {
    let r = monohurwitz_core::symmetric::check_jack_core(6).unwrap();
    assert!(r.passed() && r.compared > 100, "{}", r.to_json());
}

#[test]
fn pieri_coefficients_are_rational_in_b() {
    use monohurwitz_algebra::{RatFun, Var};
    let t = JackTable::symbolic();
    let c = monohurwitz_core::symmetric::pieri_coefficients(&t, &Partition::from_parts(vec![1])).unwrap();
    let two_b = RatFun::linear(Var::B, 2, 1);
    assert_eq!(c[0], (Partition::from_parts(vec![2]), two_b.inv().unwrap()));
    assert_eq!(c[1].1, RatFun::linear(Var::B, 1, 1).div(&two_b).unwrap());
}
