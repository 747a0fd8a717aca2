//! The acceptance suite: twelve criteria, each a bundle of check reports.

use monohurwitz_algebra::{int, BigRat};

use crate::bgw::{check_bgw_orthogonal, check_bgw_trunc_bridge, check_bgw_unitary, check_kernel, BorderEntry};
use crate::bkp::{check_beta_ratios, check_bkp, check_bkp_tau_zonal, check_trunc_poles, BkpMode};
use crate::error::{CoreError, Result};
use crate::oracle::check_against_tau;
use crate::ortho::{
    check_dimensions, check_oliveira_novaes, check_omega_duality, check_schur_expansion, check_symplectic_expansion,
    check_toprove, SymplecticForm,
};
use crate::pfaffian::{check_a_pfaffian, check_random_pfaffians, check_schur_pfaffian_random};
use crate::report::{CheckReport, Checker};
use crate::symmetric::check_jack_core;
use crate::tau::{check_commutators, check_evolution, check_feray, check_positivity, check_virasoro};

pub const CRITERIA: u32 = 12;

pub struct Criterion {
    pub number: u32,
    pub title: &'static str,
    pub reports: Vec<CheckReport>,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(|r| r.passed() && r.compared > 0)
    }

    /// The first failing report, if any.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.reports.iter().find(|r| !r.passed() || r.compared == 0)
    }
}

/// Passes when `report` fails with its first mismatch at `degree`.
pub fn expect_failure(report: CheckReport, degree: u32) -> CheckReport {
    let mut ch = Checker::new(&format!("{} fails", report.identity), &report.anchor);
    for (k, v) in &report.params {
        ch = ch.param(k, v);
    }
    match &report.witness {
        Some(w) => {
            ch.compare(w.degree, format!("first mismatch {}", w.monomial), &degree, &w.degree);
        }
        None => ch.fail(degree, "*", "a mismatch", "no mismatch"),
    }
    ch.finish()
}

fn spectrum(n: i64) -> Vec<BigRat> {
    (1..=n).map(int).collect()
}

pub fn title(k: u32) -> &'static str {
    match k {
        1 => "Jack core",
        2 => "evolution equation",
        3 => "Virasoro constraints",
        4 => "Feray recursion",
        5 => "b=0 monotone factorization oracle",
        6 => "positivity",
        7 => "Schur expansion at b=1",
        8 => "symplectic expansion at b=-1/2",
        9 => "zonal spherical function sums",
        10 => "Pfaffians",
        11 => "BKP equation",
        12 => "BGW integrals",
        _ => "unknown",
    }
}

/// Runs criterion `k`.
pub fn criterion(k: u32) -> Result<Criterion> {
    let reports = match k {
        1 => vec![check_jack_core(6)?],
        2 => vec![check_evolution(5)?],
        3 => vec![check_virasoro(5, 5)?, check_commutators(&[(1, 2), (2, 3), (1, 3), (1, 4)], 20, 6, 11)?],
        4 => vec![check_feray(6, 4)?],
        5 => vec![check_against_tau(5, 4)?],
        6 => vec![check_positivity(5, 6)?],
        7 => vec![check_schur_expansion(5)?, check_toprove(4, 3)?, check_dimensions(6)?],
        8 => vec![
            check_symplectic_expansion(4, SymplecticForm::Symplectic)?,
            check_omega_duality(5)?,
            expect_failure(check_symplectic_expansion(2, SymplecticForm::AsPrinted)?, 2),
        ],
        9 => (1..=4).map(check_oliveira_novaes).collect::<Result<_>>()?,
        10 => vec![check_random_pfaffians(50, 8, 7)?, check_schur_pfaffian_random(20, 8, 5)?, check_a_pfaffian(6, 6)?],
        11 => vec![
            check_bkp(5, &BkpMode::Symbolic)?,
            check_bkp(5, &BkpMode::default_samples())?,
            check_beta_ratios((2, 8), 4)?,
            check_bkp_tau_zonal(5)?,
            check_trunc_poles(5, 4)?,
        ],
        12 => {
            let mut r = vec![check_kernel(8)?];
            for n in 1..=3 {
                r.push(check_bgw_orthogonal(&spectrum(n), 4, BorderEntry::OnePlusI0Half)?);
                r.push(check_bgw_trunc_bridge(&spectrum(n), 4)?);
                r.push(check_bgw_unitary(&spectrum(n), 4)?);
            }
            for n in [1, 3] {
                r.push(expect_failure(check_bgw_orthogonal(&spectrum(n), 4, BorderEntry::AsPrinted)?, 0));
            }
            r
        }
        _ => return Err(CoreError::Config(format!("no criterion {k}; criteria are 1..={CRITERIA}"))),
    };
    Ok(Criterion { number: k, title: title(k), reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_failures_are_inverted() {
        let mut ch = Checker::new("demo", "x");
        ch.compare(3, "m", &1, &2);
        assert!(expect_failure(ch.finish(), 3).passed());
        let mut ch = Checker::new("demo", "x");
        ch.compare(3, "m", &1, &2);
        assert!(!expect_failure(ch.finish(), 1).passed());
        let ok = Checker::new("demo", "x").finish();
        assert!(!expect_failure(ok, 0).passed());
    }

    #[test]
    fn unknown_criterion() {
        assert!(criterion(13).is_err());
    }
}
