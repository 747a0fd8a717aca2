use std::time::Instant;

use monohurwitz_algebra::{int, part, Partition, Var};
use monohurwitz_core::ortho::*;
use monohurwitz_core::report::CheckReport;

fn assert_pass(name: &str, f: impl FnOnce() -> monohurwitz_core::Result<CheckReport>) {
    let start = Instant::now();
    let r = f().unwrap();
    println!("{name}: {:?} {}", start.elapsed(), r.to_json());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
}

#[test]
fn dimensions_and_a_coefficients_agree() {
    assert_pass("dimensions", || check_dimensions(6));
}

#[test]
fn a_coefficient_sum_identity() {
    assert_pass("toprove", || check_toprove(4, 3));
}

#[test]
fn schur_expansion_at_b_one() {
    assert_pass("schur b=1", || check_schur_expansion(5));
}

#[test]
fn symplectic_expansion() {
    assert_pass("symplectic", || check_symplectic_expansion(4, SymplecticForm::Symplectic));
}

#[test]
fn symplectic_expansion_with_orthogonal_dimension_fails_at_t2() {
    let r = check_symplectic_expansion(2, SymplecticForm::AsPrinted).unwrap();
    println!("{}", r.to_json());
    assert!(!r.passed());
    assert_eq!(r.witness.as_ref().unwrap().degree, 2);
}

#[test]
fn omega_two_duality() {
    assert_pass("omega duality", || check_omega_duality(5));
}

#[test]
fn spherical_functions_are_normalized() {
    for m in 1..=5 {
        let ones = Partition::from_parts(vec![1; m as usize]);
        for lambda in Partition::all(m) {
            assert_eq!(zonal_spherical(&lambda, &ones).unwrap(), int(1), "omega_{lambda}");
        }
    }
}

#[test]
fn zonal_spherical_sums() {
    for m in 1..=4 {
        assert_pass("oliveira-novaes", || check_oliveira_novaes(m));
    }
}

#[test]
fn virasoro_on_scaled_schur() {
    assert_pass("virasoro on schur", || check_virasoro_on_schur(5, 2));
}

#[test]
fn dimensions_are_positive_in_range() {
    for lambda in Partition::all_up_to(6) {
        let d = ortho_dim(&lambda);
        assert_eq!(d.shifts.len() as u32, lambda.size());
        for n in lambda.len().max(1)..=lambda.len() + 3 {
            assert!(d.eval(&int(2 * n as i64)) > int(0), "o_{lambda}(1^{})", 2 * n);
        }
    }
}

#[test]
fn known_dimensions() {
    // so(6) ≅ sl(4): the adjoint and the 20-dimensional traceless symmetric square.
    assert_eq!(so_dim(&part![1, 1], 3).unwrap(), int(15));
    assert_eq!(so_dim(&part![2], 3).unwrap(), int(20));
    assert_eq!(sp_dim(&part![2]).eval(&[(Var::N, int(2))]).unwrap(), int(10));
    assert_eq!(zonal_spherical(&part![1], &part![1]).unwrap(), int(1));
    assert_eq!(g_coeff(&part![1], &part![1]).unwrap(), int(1));
}
