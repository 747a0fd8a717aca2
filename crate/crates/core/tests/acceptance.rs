//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use monohurwitz_core::suite::{criterion, title, CRITERIA};

fn main() -> ExitCode {
    let mut failed = 0;
    for k in 1..=CRITERIA {
        let start = Instant::now();
        let outcome = criterion(k);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(c) if c.passed() => {
                let compared: usize = c.reports.iter().map(|r| r.compared).sum();
                println!("criterion {k:>2}: pass  {} ({compared} comparisons, {secs:.2}s)", c.title);
            }
            Ok(c) => {
                failed += 1;
                let detail = c.first_failure().map(|r| r.to_json()).unwrap_or_default();
                println!("criterion {k:>2}: FAIL  {} ({secs:.2}s) {detail}", c.title);
            }
            Err(e) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL  {} ({secs:.2}s) error: {e}", title(k));
            }
        }
    }
    println!("{} of {CRITERIA} criteria passed", CRITERIA - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
