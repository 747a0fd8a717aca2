use std::time::Instant;

use monohurwitz_algebra::{int, rat, BigRat};
use monohurwitz_core::bgw::*;
use monohurwitz_core::report::CheckReport;

fn assert_pass(name: &str, f: impl FnOnce() -> monohurwitz_core::Result<CheckReport>) {
    let start = Instant::now();
    let r = f().unwrap();
    println!("{name}: {:?} {}", start.elapsed(), r.to_json());
    assert!(r.passed() && r.compared > 0, "{}", r.to_json());
}

fn spectrum(n: i64) -> Vec<BigRat> {
    (1..=n).map(int).collect()
}

#[test]
fn kernel_descriptions_agree() {
    assert_pass("kernel", || check_kernel(8));
}

#[test]
fn bessel_integral_with_one_eighth_is_half_the_kernel() {
    let a = bgw_kernel(6);
    let eighth = bgw_kernel_bessel(6, &rat(1, 8));
    assert_eq!(a.len(), eighth.len());
    for (k, v) in &a {
        assert_eq!(&eighth[k], &(v / int(2)), "{k:?}");
    }
}

#[test]
fn orthogonal_pfaffian_formula() {
    for n in 1..=3 {
        assert_pass("orthogonal", || check_bgw_orthogonal(&spectrum(n), 4, BorderEntry::OnePlusI0Half));
    }
    assert_pass("orthogonal rational", || {
        check_bgw_orthogonal(&[rat(1, 2), rat(-3, 5), rat(7, 4)], 4, BorderEntry::OnePlusI0Half)
    });
    assert_pass("orthogonal rank 4", || check_bgw_orthogonal(&spectrum(4), 3, BorderEntry::OnePlusI0Half));
}

#[test]
fn printed_border_entry_fails_at_t0_for_odd_rank() {
    for n in [1, 3] {
        let r = check_bgw_orthogonal(&spectrum(n), 4, BorderEntry::AsPrinted).unwrap();
        println!("{}", r.to_json());
        assert!(!r.passed());
        let w = r.witness.unwrap();
        assert_eq!(w.degree, 0, "{w:?}");
    }
    // Even rank has no border, so both choices agree.
    assert_pass("even rank", || check_bgw_orthogonal(&spectrum(2), 4, BorderEntry::AsPrinted));
}

#[test]
fn unitary_determinant_formula() {
    for n in 1..=3 {
        assert_pass("unitary", || check_bgw_unitary(&spectrum(n), 4));
    }
    assert_pass("unitary rational", || check_bgw_unitary(&[rat(2, 3), rat(-1, 7)], 4));
}

#[test]
fn truncation_bridge() {
    for n in 1..=3 {
        assert_pass("bridge", || check_bgw_trunc_bridge(&spectrum(n), 4));
    }
}

#[test]
fn orthogonal_series_is_symmetric_in_the_spectrum() {
    let x = [int(1), int(2), int(5)];
    let y = [int(5), int(1), int(2)];
    let b = BorderEntry::default();
    assert_eq!(bgw_orthogonal(&x, 4, b).unwrap(), bgw_orthogonal(&y, 4, b).unwrap());
}

#[test]
fn orthogonal_series_depends_on_t_times_x() {
    let x = spectrum(3);
    let base = bgw_orthogonal(&x, 4, BorderEntry::default()).unwrap();
    for c in [2i64, 3] {
        let scaled: Vec<BigRat> = x.iter().map(|v| v * int(c)).collect();
        let s = bgw_orthogonal(&scaled, 4, BorderEntry::default()).unwrap();
        let rescaled: Vec<BigRat> = s.iter().enumerate().map(|(k, v)| v / int(c).pow(k as i32)).collect();
        assert_eq!(rescaled, base, "c={c}");
    }
}

#[test]
fn haar_normalization() {
    for n in 1..=4 {
        assert_eq!(bgw_orthogonal(&spectrum(n), 0, BorderEntry::default()).unwrap(), vec![int(1)]);
        assert_eq!(bgw_unitary(&spectrum(n), 0).unwrap(), vec![int(1)]);
    }
}
