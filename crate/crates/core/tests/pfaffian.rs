use std::time::Instant;

use monohurwitz_algebra::{int, rat, BigRat, Partition};
use monohurwitz_core::linalg::identity;
use monohurwitz_core::pfaffian::*;
use monohurwitz_core::report::CheckReport;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_pass(name: &str, f: impl FnOnce() -> monohurwitz_core::Result<CheckReport>) {
    let start = Instant::now();
    let r = f().unwrap();
    println!("{name}: {:?} {}", start.elapsed(), r.to_json());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
}

#[test]
fn pfaffian_squares_to_determinant() {
    assert_pass("random pfaffians", || check_random_pfaffians(50, 8, 7));
}

#[test]
fn a_coefficients_as_pfaffians() {
    assert_pass("a pfaffian", || check_a_pfaffian(6, 6));
}

#[test]
fn schur_pfaffian_on_integer_points() {
    for n in 1..=7i64 {
        let x: Vec<BigRat> = (1..=n).map(|i| int(3 * i * i - i + 2)).collect();
        assert_pass("schur pfaffian", || check_schur_pfaffian(&x));
    }
    // A trailing zero, as produced by partitions shorter than the rank.
    assert_pass("schur pfaffian zero", || check_schur_pfaffian(&[int(5), int(2), int(0)]));
    assert_pass("schur pfaffian zero", || check_schur_pfaffian(&[int(4), int(1), int(0), int(0)]));
    assert_pass("schur pfaffian rational", || check_schur_pfaffian(&[rat(1, 2), rat(7, 3), rat(5, 4)]));
}

#[test]
fn minor_summation_with_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let a = random_skew(&mut rng, 4);
    assert_pass("identity", || check_minor_summation(&identity(4), &a));
    let b = random_matrix(&mut rng, 2, 4);
    assert_pass("2x4", || check_minor_summation(&b, &a));
}

#[test]
fn swapping_an_index_pair_flips_the_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = random_skew(&mut rng, 6);
    let swapped = a.principal(&[1, 0, 2, 3, 4, 5]);
    assert_eq!(pfaffian(&swapped).unwrap(), -pfaffian(&a).unwrap());
}

#[test]
fn a_pfaffian_for_empty_partition_is_one() {
    for n in 1..=6 {
        assert_eq!(a_pfaffian(&Partition::empty(), n).unwrap(), int(1), "n={n}");
    }
}
