use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monohurwitz_algebra::{BigRat, Partition};
use monohurwitz_core::bgw::{self, BorderEntry};
use monohurwitz_core::bkp::{self, BkpMode};
use monohurwitz_core::report::{CheckReport, Status};
use monohurwitz_core::suite::{self, CRITERIA};
use monohurwitz_core::tau::{self, FerayTable, Param};
use monohurwitz_core::{oracle, ortho, pfaffian, symmetric, CoreError};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("invalid configuration: {0}")]
    Config(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// Exact verification of b-deformed monotone Hurwitz generating functions.
#[derive(Parser)]
#[command(name = "monohurwitz", version)]
struct Cli {
    /// Output format: JSON lines, CSV for tables, or plain text.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Sample,
}

#[derive(Subcommand)]
enum Command {
    /// The generating function and its differential constraints.
    #[command(subcommand)]
    Tau(TauCmd),
    /// Féray coefficients.
    #[command(subcommand)]
    Feray(FerayCmd),
    /// Orthogonal dimensions and the Jack core.
    #[command(subcommand)]
    Ortho(OrthoCmd),
    /// The b=1 Schur expansion.
    #[command(name = "schur-b1", subcommand)]
    SchurB1(SchurCmd),
    /// The b=-1/2 symplectic expansion and the omega_2 duality.
    #[command(subcommand)]
    Symplectic(SymplecticCmd),
    /// Sums of zonal spherical functions over γ ⊢ m.
    #[command(subcommand)]
    Onc(OncCmd),
    /// Pfaffian identities.
    #[command(subcommand)]
    Pfaffian(PfaffianCmd),
    /// The first BKP equation.
    #[command(subcommand)]
    Bkp(BkpCmd),
    /// Orthogonal and unitary BGW integrals.
    #[command(subcommand)]
    Bgw(BgwCmd),
    /// Brute-force monotone factorizations at b=0.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// The acceptance suite.
    All {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Subcommand)]
enum TauCmd {
    /// Coefficients of τ through t^nmax.
    Expand {
        #[arg(long, default_value_t = 3)]
        nmax: u32,
        #[command(flatten)]
        sample: SampleArgs,
    },
    CheckEvolution {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[command(flatten)]
        sample: SampleArgs,
    },
    CheckVirasoro {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long, default_value_t = 5)]
        imax: u32,
    },
    CheckCommutators {
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long, default_value_t = 11)]
        seed: u64,
    },
    /// u Σ p_i L_i against the evolution operator on random series.
    CheckSum {
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        precision: u32,
        #[arg(long, default_value_t = 12)]
        seed: u64,
    },
    CheckReconstruction {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
    },
    CheckPositivity {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long, default_value_t = 6)]
        uorder: u32,
    },
    CheckOrthogonality {
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    mode: Mode,
    /// Value of b in sampled mode.
    #[arg(long, value_parser = parse_rat)]
    b: Option<BigRat>,
    /// Value of N = 1/u in sampled mode.
    #[arg(long, value_parser = parse_rat)]
    n: Option<BigRat>,
}

impl SampleArgs {
    fn point(&self) -> Result<Option<(BigRat, BigRat)>> {
        match (self.mode, &self.b, &self.n) {
            (Mode::Symbolic, _, _) => Ok(None),
            (Mode::Sample, Some(b), Some(n)) => Ok(Some((b.clone(), n.clone()))),
            (Mode::Sample, _, _) => Err(CliError::Config("sampled mode needs --b and --n".into())),
        }
    }
}

#[derive(Subcommand)]
enum FerayCmd {
    /// a^k_ρ for |ρ| <= size, k <= kmax, followed by the recursion check.
    Table {
        #[arg(long, default_value_t = 4)]
        size: u32,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    Check {
        #[arg(long, default_value_t = 6)]
        size: u32,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
}

#[derive(Subcommand)]
enum OrthoCmd {
    /// o_λ(1^N) for |λ| <= size.
    Dim {
        #[arg(long, default_value_t = 4)]
        size: u32,
    },
    /// Dimension formulas against Weyl's formula.
    CheckDims {
        #[arg(long, default_value_t = 6)]
        size: u32,
    },
    /// Jack orthogonality, norms, eigenvalues and pairings.
    CheckJack {
        #[arg(long, default_value_t = 6)]
        size: u32,
    },
}

#[derive(Subcommand)]
enum SchurCmd {
    Check {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        /// Bounds for the rational-function identity behind the expansion.
        #[arg(long, default_value_t = 4)]
        size: u32,
        #[arg(long, default_value_t = 3)]
        r: u32,
    },
}

#[derive(Subcommand)]
enum SymplecticCmd {
    Check {
        #[arg(long, default_value_t = 4)]
        nmax: u32,
        #[arg(long, default_value_t = 5)]
        size: u32,
        /// Use the alternative sign convention instead of the symplectic one.
        #[arg(long)]
        as_printed: bool,
    },
}

#[derive(Subcommand)]
enum OncCmd {
    Check {
        #[arg(long, default_value_t = 4)]
        m: u32,
    },
}

#[derive(Subcommand)]
enum PfaffianCmd {
    Check {
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 20)]
        tuples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Bounds for the a_λ(n) Pfaffian: |λ| <= size, n <= nmax.
        #[arg(long, default_value_t = 6)]
        size: u32,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum BkpCmd {
    Check {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
        mode: Mode,
        /// Values of N in sampled mode.
        #[arg(long, value_delimiter = ',', value_parser = parse_rat)]
        samples: Vec<BigRat>,
    },
}

#[derive(Subcommand)]
enum BgwCmd {
    Orthogonal {
        #[arg(long, value_delimiter = ',', value_parser = parse_rat, required = true)]
        x: Vec<BigRat>,
        #[arg(long, default_value_t = 4)]
        tmax: u32,
        /// Use the border entry I_0/2 instead of (1+I_0)/2.
        #[arg(long)]
        as_printed: bool,
    },
    Unitary {
        #[arg(long, value_delimiter = ',', value_parser = parse_rat, required = true)]
        x: Vec<BigRat>,
        #[arg(long, default_value_t = 4)]
        tmax: u32,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Cycle-type histogram of monotone factorizations.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    Compare {
        #[arg(long, default_value_t = 5)]
        n: u32,
        #[arg(long, default_value_t = 4)]
        r: u32,
    },
}

fn parse_rat(s: &str) -> std::result::Result<BigRat, String> {
    BigRat::from_str(s.trim()).map_err(|e| format!("{s:?} is not a rational: {e}"))
}

/// Collects output lines and the overall verdict.
struct Out {
    format: Format,
    ok: bool,
}

impl Out {
    fn row(&self, value: Value, csv: &[String]) {
        match self.format {
            Format::Csv => println!("{}", csv.join(",")),
            Format::Json => println!("{value}"),
            Format::Human => println!("{}", csv.join("  ")),
        }
    }

    fn reports(&mut self, mut reports: Vec<CheckReport>) {
        reports.sort_by(|a, b| (&a.identity, &a.params).cmp(&(&b.identity, &b.params)));
        for r in reports {
            self.report(&r);
        }
    }

    fn report(&mut self, r: &CheckReport) {
        self.ok &= r.passed();
        if self.format == Format::Human {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("{verdict}  {} [{}] {} comparisons", r.identity, params.join(" "), r.compared);
            if let Some(w) = &r.witness {
                println!("      degree {} {}: expected {}, got {}", w.degree, w.monomial, w.expected, w.got);
            }
        } else {
            println!("{}", r.to_json());
        }
    }
}

fn error_report(identity: &str, e: &CliError) -> CheckReport {
    CheckReport {
        identity: identity.to_string(),
        anchor: String::new(),
        params: Default::default(),
        status: Status::Fail,
        compared: 0,
        witness: None,
        note: Some(e.to_string()),
    }
}

fn series_rows(out: &Out, label: &str, series: &[BigRat]) {
    for (k, c) in series.iter().enumerate() {
        out.row(json!({"series": label, "power": k, "coefficient": c.to_string()}), &[label.into(), k.to_string(), c.to_string()]);
    }
}

fn run(cmd: Command, out: &mut Out) -> Result<()> {
    match cmd {
        Command::Tau(t) => run_tau(t, out)?,
        Command::Feray(FerayCmd::Table { size, kmax }) => {
            let table = FerayTable::extract(&tau::expand_tau_symbolic(size, Param::U)?, kmax)?;
            for rho in Partition::all_up_to(size).into_iter().skip(1) {
                for k in 0..=kmax {
                    let a = table.get(k as i64, &rho);
                    out.row(
                        json!({"k": k, "rho": rho.to_string(), "a": a.to_string()}),
                        &[k.to_string(), format!("\"{rho}\""), format!("\"{a}\"")],
                    );
                }
            }
            out.reports(vec![tau::check_feray(size, kmax)?]);
        }
        Command::Feray(FerayCmd::Check { size, kmax }) => out.reports(vec![tau::check_feray(size, kmax)?]),
        Command::Ortho(OrthoCmd::Dim { size }) => {
            for lambda in Partition::all_up_to(size) {
                let d = ortho::ortho_dim(&lambda).polynomial();
                out.row(json!({"lambda": lambda.to_string(), "o_dim": d.to_string()}), &[format!("\"{lambda}\""), format!("\"{d}\"")]);
            }
        }
        Command::Ortho(OrthoCmd::CheckDims { size }) => out.reports(vec![ortho::check_dimensions(size)?]),
        Command::Ortho(OrthoCmd::CheckJack { size }) => out.reports(vec![symmetric::check_jack_core(size)?]),
        Command::SchurB1(SchurCmd::Check { nmax, size, r }) => {
            out.reports(vec![ortho::check_schur_expansion(nmax)?, ortho::check_toprove(size, r)?])
        }
        Command::Symplectic(SymplecticCmd::Check { nmax, size, as_printed }) => {
            let form = if as_printed { ortho::SymplecticForm::AsPrinted } else { ortho::SymplecticForm::Symplectic };
            out.reports(vec![ortho::check_symplectic_expansion(nmax, form)?, ortho::check_omega_duality(size)?])
        }
        Command::Onc(OncCmd::Check { m }) => {
            out.reports((1..=m).map(ortho::check_oliveira_novaes).collect::<std::result::Result<_, _>>()?)
        }
        Command::Pfaffian(PfaffianCmd::Check { count, max_size, tuples, seed, size, nmax }) => out.reports(vec![
            pfaffian::check_random_pfaffians(count, max_size, seed)?,
            pfaffian::check_schur_pfaffian_random(tuples, max_size, seed)?,
            pfaffian::check_a_pfaffian(size, nmax)?,
        ]),
        Command::Bkp(BkpCmd::Check { nmax, mode, samples }) => {
            let mode = match (mode, samples.is_empty()) {
                (Mode::Symbolic, _) => BkpMode::Symbolic,
                (Mode::Sample, true) => BkpMode::default_samples(),
                (Mode::Sample, false) => BkpMode::Sampled(samples),
            };
            out.reports(vec![bkp::check_bkp(nmax, &mode)?]);
        }
        Command::Bgw(BgwCmd::Orthogonal { x, tmax, as_printed }) => {
            let border = if as_printed { BorderEntry::AsPrinted } else { BorderEntry::OnePlusI0Half };
            series_rows(out, "orthogonal", &bgw::bgw_orthogonal(&x, tmax, border)?);
            out.reports(vec![bgw::check_bgw_orthogonal(&x, tmax, border)?]);
        }
        Command::Bgw(BgwCmd::Unitary { x, tmax }) => {
            series_rows(out, "unitary", &bgw::bgw_unitary(&x, tmax)?);
            out.reports(vec![bgw::check_bgw_unitary(&x, tmax)?]);
        }
        Command::Oracle(OracleCmd::Enumerate { n, r }) => {
            for (lambda, count) in oracle::enumerate(n, r)? {
                out.row(json!({"lambda": lambda.to_string(), "count": count}), &[format!("\"{lambda}\""), count.to_string()]);
            }
        }
        Command::Oracle(OracleCmd::Compare { n, r }) => out.reports(vec![oracle::check_against_tau(n, r)?]),
        Command::All { only } => run_all(only, out)?,
    }
    Ok(())
}

fn run_tau(cmd: TauCmd, out: &mut Out) -> Result<()> {
    match cmd {
        TauCmd::Expand { nmax, sample } => match sample.point()? {
            None => {
                let series = tau::expand_tau_symbolic(nmax, Param::U)?;
                for n in 0..=nmax {
                    for (mu, c) in series.slice(n).iter() {
                        out.row(
                            json!({"degree": n, "monomial": format!("p{mu}"), "coefficient": c.to_string()}),
                            &[n.to_string(), format!("\"p{mu}\""), format!("\"{c}\"")],
                        );
                    }
                }
            }
            Some((b, n_val)) => {
                let series = tau::expand_tau_sampled(nmax, &b, &n_val)?;
                for n in 0..=nmax {
                    for (mu, c) in series.slice(n).iter() {
                        out.row(
                            json!({"degree": n, "monomial": format!("p{mu}"), "coefficient": c.to_string()}),
                            &[n.to_string(), format!("\"p{mu}\""), c.to_string()],
                        );
                    }
                }
            }
        },
        TauCmd::CheckEvolution { nmax, sample } => {
            let report = match sample.point()? {
                None => tau::check_evolution(nmax)?,
                Some((b, n)) => tau::check_evolution_sampled(nmax, &b, &n)?,
            };
            out.reports(vec![report]);
        }
        TauCmd::CheckVirasoro { nmax, imax } => out.reports(vec![tau::check_virasoro(nmax, imax)?]),
        TauCmd::CheckCommutators { samples, degree, seed } => {
            out.reports(vec![tau::check_commutators(&[(1, 2), (2, 3), (1, 3), (1, 4)], samples, degree, seed)?])
        }
        TauCmd::CheckSum { samples, precision, seed } => {
            out.reports(vec![tau::check_virasoro_sum(samples, precision, seed)?])
        }
        TauCmd::CheckReconstruction { nmax } => out.reports(vec![tau::check_reconstruction(nmax)?]),
        TauCmd::CheckPositivity { nmax, uorder } => out.reports(vec![tau::check_positivity(nmax, uorder)?]),
        TauCmd::CheckOrthogonality { nmax } => out.reports(vec![tau::check_character_orthogonality(nmax)?]),
    }
    Ok(())
}

fn run_all(only: Vec<u32>, out: &mut Out) -> Result<()> {
    let selected: Vec<u32> = if only.is_empty() { (1..=CRITERIA).collect() } else { only };
    for k in selected {
        let c = suite::criterion(k)?;
        out.ok &= c.passed();
        let status = if c.passed() { "pass" } else { "fail" };
        match out.format {
            Format::Json => {
                let reports: Vec<Value> = c.reports.iter().map(|r| serde_json::to_value(r).expect("reports serialize")).collect();
                println!("{}", json!({"criterion": k, "title": c.title, "status": status, "reports": reports}));
            }
            _ => {
                println!("criterion {k:>2}: {status}  {}", c.title);
                if let Some(r) = c.first_failure() {
                    println!("      {}", r.to_json());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { format: cli.format, ok: true };
    if let Err(e) = run(cli.command, &mut out) {
        out.report(&error_report("error", &e));
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
