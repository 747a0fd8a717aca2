use std::time::Instant;

use monohurwitz_core::bkp::*;
use monohurwitz_core::report::CheckReport;

fn assert_pass(name: &str, f: impl FnOnce() -> monohurwitz_core::Result<CheckReport>) {
    let start = Instant::now();
    let r = f().unwrap();
    println!("{name}: {:?} {}", start.elapsed(), r.to_json());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
}

#[test]
fn bkp_degree_zero_slice() {
    assert_pass("bkp d=0", || check_bkp(0, &BkpMode::Symbolic));
}

#[test]
fn bkp_equation_sampled() {
    assert_pass("bkp sampled", || check_bkp(5, &BkpMode::default_samples()));
}

#[test]
fn bkp_equation_symbolic() {
    assert_pass("bkp symbolic", || check_bkp(3, &BkpMode::Symbolic));
}

#[test]
fn bkp_equation_symbolic_through_five() {
    assert_pass("bkp symbolic 5", || check_bkp(5, &BkpMode::Symbolic));
}

#[test]
fn misplaced_shift_breaks_the_equation() {
    use monohurwitz_algebra::Var;
    let tau = bkp_tau(6).unwrap();
    let s2 = s_ratio(2).unwrap();
    let minus = tau.map(|c| c.shift(Var::N, -1));
    let plus = tau.map(|c| c.shift(Var::N, 1));
    let res = bkp_residual([&minus, &tau, &plus], &s2, 2).unwrap();
    assert!((0..=2).any(|d| !res.slice(d).is_zero()));
}

#[test]
fn beta_ratio_identities() {
    assert_pass("beta ratios", || check_beta_ratios((2, 8), 4));
}

#[test]
fn truncations_have_no_integer_poles() {
    assert_pass("trunc poles", || check_trunc_poles(5, 4));
}

#[test]
fn schur_side_matches_zonal_side() {
    assert_pass("zonal bridge", || check_bkp_tau_zonal(5));
}
