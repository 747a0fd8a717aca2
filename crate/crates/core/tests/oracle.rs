use std::time::Instant;

use monohurwitz_core::oracle::*;

#[test]
fn factorization_counts_match_tau_at_b_zero() {
    let start = Instant::now();
    let r = check_against_tau(5, 4).unwrap();
    println!("oracle: {:?} {}", start.elapsed(), r.to_json());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
}

#[test]
fn histogram_totals_are_complete_homogeneous_values() {
    for n in 1..=6 {
        for r in 0..=5 {
            let total: u64 = enumerate(n, r).unwrap().values().sum();
            assert_eq!(num_bigint::BigInt::from(total), sequence_count(n, r), "n={n} r={r}");
        }
    }
}

#[test]
fn product_parity_matches_the_number_of_transpositions() {
    for n in 2..=5 {
        for r in 0..=4 {
            for lambda in enumerate(n, r).unwrap().keys() {
                // Sign of a permutation of cycle type λ is (-1)^{n - ℓ(λ)}.
                assert_eq!((n as usize - lambda.len()) % 2, r as usize % 2, "{lambda}");
            }
        }
    }
}
