use std::time::Instant;

use monohurwitz_algebra::{int, rat, Partition, RatFun, Var};
use monohurwitz_core::symmetric::{content, JackTable};
use monohurwitz_core::tau::*;

fn timed<T>(name: &str, f: impl FnOnce() -> T) -> T {
    let t = Instant::now();
    let r = f();
    eprintln!("{name}: {:?}", t.elapsed());
    r
}

#[test]
fn evolution_holds_through_t5() {
    let r = timed("evolution", || check_evolution(5).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn virasoro_constraints_hold_through_t5() {
    let r = timed("virasoro", || check_virasoro(5, 5).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn commutators_on_random_functions() {
    let r = timed("commutators", || check_commutators(&[(1, 2), (2, 3), (1, 3)], 20, 6, 11).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn virasoro_sum_is_evolution() {
    let r = timed("sum", || check_virasoro_sum(5, 5, 12).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn evolution_determines_tau() {
    let r = timed("reconstruction", || check_reconstruction(5).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn feray_recursion_and_oracle() {
    let r = timed("feray", || check_feray(6, 4).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn jack_character_orthogonality() {
    let r = timed("orthogonality", || check_character_orthogonality(6).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn positivity_of_connected_series() {
    let r = timed("positivity", || check_positivity(5, 6).unwrap());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
    eprintln!("{}", r.to_json());
}

#[test]
fn flipped_content_breaks_evolution() {
    let table = JackTable::symbolic();
    let b = RatFun::var(Var::B);
    let u = RatFun::var(Var::U);
    let flipped = expand_tau_with(&table, 3, |r, c| {
        let w = RatFun::one().add(&u.mul(&content(&b, c, r)));
        Ok(u.div(&w)?)
    })
    .unwrap();
    let residual = evolution_residual(&flipped, &b, &u).unwrap();
    assert!(!residual.is_zero());
}

#[test]
fn u_and_n_forms_agree() {
    let bu = expand_tau_symbolic(4, Param::U).unwrap();
    let bn = expand_tau_symbolic(4, Param::N).unwrap();
    let n_inv = RatFun::var(Var::N).inv().unwrap();
    for mu in Partition::all_up_to(4) {
        assert_eq!(bu.coeff(&mu).substitute(Var::U, &n_inv).unwrap(), bn.coeff(&mu), "{mu}");
    }
}

#[test]
fn sampled_mode_matches_symbolic() {
    let bn = expand_tau_symbolic(4, Param::N).unwrap();
    for (b, n) in [(rat(1, 3), rat(7, 2)), (int(2), rat(-5, 3)), (rat(-1, 2), rat(9, 7))] {
        let s = expand_tau_sampled(4, &b, &n).unwrap();
        for mu in Partition::all_up_to(4) {
            let v = bn.coeff(&mu).eval(&[(Var::B, b.clone()), (Var::N, n.clone())]).unwrap();
            assert_eq!(s.coeff(&mu), v);
        }
    }
}
