//! Command-line front end for the cyclic-code machinery: factor the
//! quotient modulus, print census counts (single row or CSV table, with
//! an optional diff against the published Z_8 reference table), list
//! codes with their generator polynomials, and replay the closed forms
//! against brute-force oracles.

mod reference;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use zpmcyclic::oracle::{crosscheck, Budgets};
use zpmcyclic::{
    code_counts, enumerate_profiles, profile_space_size, CodeCounts, Error, ExponentProfile,
    FactorBasis, GeneratorForm, ModulusKind, ProfileFilter, RingParams,
};

const BUDGET_ENV: &str = "ZPMCYCLIC_BUDGET";

#[derive(Parser)]
#[command(
    name = "zpmcyclic",
    version,
    about = "Cyclic self-orthogonal and self-dual codes of odd length over Z_{p^m}: \
             construct, classify, count, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModulusArg {
    /// x^n - 1 itself
    Standard,
    /// x^n + (p - 1), which factors the same way mod p and reduces to the
    /// scalar p in the quotient ring
    Shifted,
}

impl From<ModulusArg> for ModulusKind {
    fn from(arg: ModulusArg) -> ModulusKind {
        match arg {
            ModulusArg::Standard => ModulusKind::Standard,
            ModulusArg::Shifted => ModulusKind::Shifted,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    So,
    TrivialSo,
    NontrivialSo,
    Sd,
}

impl FilterArg {
    fn name(self) -> &'static str {
        match self {
            FilterArg::All => "all",
            FilterArg::So => "so",
            FilterArg::TrivialSo => "trivial-so",
            FilterArg::NontrivialSo => "nontrivial-so",
            FilterArg::Sd => "sd",
        }
    }
}

impl From<FilterArg> for ProfileFilter {
    fn from(arg: FilterArg) -> ProfileFilter {
        match arg {
            FilterArg::All => ProfileFilter::All,
            FilterArg::So => ProfileFilter::SelfOrthogonal,
            FilterArg::TrivialSo => ProfileFilter::TrivialSelfOrthogonal,
            FilterArg::NontrivialSo => ProfileFilter::NontrivialSelfOrthogonal,
            FilterArg::Sd => ProfileFilter::SelfDual,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    /// The factor product as printed: p^mu times the factors raised to
    /// their exponents minus mu
    Product,
    /// The product reduced modulo x^n - 1
    Reduced,
}

impl FormArg {
    fn name(self) -> &'static str {
        match self {
            FormArg::Product => "product",
            FormArg::Reduced => "reduced",
        }
    }
}

impl From<FormArg> for GeneratorForm {
    fn from(arg: FormArg) -> GeneratorForm {
        match arg {
            FormArg::Product => GeneratorForm::Product,
            FormArg::Reduced => GeneratorForm::Reduced,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Factor the chosen modulus into basic irreducible polynomials over Z_{p^m}
    Factor {
        /// Prime base of the coefficient ring Z_{p^m}
        #[arg(long)]
        p: u64,
        /// Exponent of the coefficient ring Z_{p^m}
        #[arg(long)]
        m: u32,
        /// Code length (odd, coprime to p)
        #[arg(long)]
        n: u64,
        /// Which modulus to factor
        #[arg(long, value_enum, default_value_t = ModulusArg::Shifted)]
        modulus: ModulusArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form census for one length: trivial/nontrivial self-orthogonal and self-dual counts
    Counts {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Census rows for every valid odd length up to a bound
    /// (CSV columns: n,gamma,delta,N_t,N_n,N_sd_formula,N_sd_actual)
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        /// Largest length to include
        #[arg(long = "n-max")]
        n_max: u64,
        /// Annotate rows that disagree with the published reference table
        /// (requires --p 2 --m 3)
        #[arg(long = "diff-paper")]
        diff_paper: bool,
        /// Worker threads; the output is byte-identical regardless
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List codes as exponent profiles with their generator polynomials
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u64,
        /// Which codes to list
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Generator polynomial form
        #[arg(long, value_enum, default_value_t = FormArg::Product)]
        form: FormArg,
        /// Show the single code with these comma-separated exponents
        /// (e.g. 2,0,3); overrides --filter and --limit
        #[arg(long)]
        profile: Option<String>,
        /// Stop after this many codes
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Replay the closed-form claims against brute-force oracles
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        Failure::Domain(err)
    }
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Domain(err) => {
                eprintln!("error: {err}");
                match err {
                    Error::BudgetExceeded { .. } => ExitCode::from(3),
                    _ => ExitCode::from(2),
                }
            }
            Failure::Usage(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
        }
    }
}

/// Die silently on a closed pipe (`... | head`) instead of panicking on
/// the failed write, as terminal tools conventionally do.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Factor {
            p,
            m,
            n,
            modulus,
            format,
        } => {
            cmd_factor(p, m, n, modulus.into(), format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Counts { p, m, n, format } => {
            cmd_counts(p, m, n, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            p,
            m,
            n_max,
            diff_paper,
            jobs,
            format,
        } => {
            cmd_table(p, m, n_max, diff_paper, jobs, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            p,
            m,
            n,
            filter,
            form,
            profile,
            limit,
            format,
        } => {
            cmd_enumerate(p, m, n, filter, form, profile, limit, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { p, m, n, format } => cmd_verify(p, m, n, format),
    }
}

/// Budgets for the enumeration-heavy commands; ZPMCYCLIC_BUDGET (a single
/// positive integer) overrides both the codeword and the profile budget.
fn budgets() -> Result<Budgets, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => {
            let value: u64 = raw.trim().parse().map_err(|_| {
                Failure::Usage(format!(
                    "{BUDGET_ENV} must be a positive integer, got {raw:?}"
                ))
            })?;
            if value == 0 {
                return Err(Failure::Usage(format!(
                    "{BUDGET_ENV} must be a positive integer, got 0"
                )));
            }
            Ok(Budgets {
                codewords: value,
                profiles: value,
            })
        }
        Err(std::env::VarError::NotPresent) => Ok(Budgets::default()),
        Err(std::env::VarError::NotUnicode(_)) => Err(Failure::Usage(format!(
            "{BUDGET_ENV} must be valid UTF-8"
        ))),
    }
}

fn cmd_factor(p: u64, m: u32, n: u64, kind: ModulusKind, format: Format) -> Result<(), Failure> {
    let ring = RingParams::new(p, m)?;
    let basis = FactorBasis::new(ring, n, kind)?;
    match format {
        Format::Text => {
            let mut parts: Vec<String> =
                basis.factors().iter().map(|f| f.to_string()).collect();
            parts.push(format!("gamma={} delta={}", basis.gamma(), basis.delta()));
            println!("{}", parts.join("; "));
        }
        Format::Json => {
            let factors: Vec<Vec<u64>> = basis
                .factors()
                .iter()
                .map(|f| f.coeffs().to_vec())
                .collect();
            let doc = serde_json::json!({
                "p": p,
                "m": m,
                "n": n,
                "modulus": basis.kind().to_string(),
                "factors": factors,
                "gamma": basis.gamma(),
                "delta": basis.delta(),
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn csv_row(counts: &CodeCounts) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        counts.n,
        counts.gamma,
        counts.delta,
        counts.trivial_so,
        counts.nontrivial_so,
        counts.self_dual_formula,
        counts.self_dual_actual
    )
}

fn row_json(counts: &CodeCounts) -> serde_json::Value {
    serde_json::json!({
        "n": counts.n,
        "gamma": counts.gamma,
        "delta": counts.delta,
        "total_so": counts.total_so.to_string(),
        "trivial_so": counts.trivial_so.to_string(),
        "nontrivial_so": counts.nontrivial_so.to_string(),
        "self_dual_formula": counts.self_dual_formula.to_string(),
        "self_dual_actual": counts.self_dual_actual.to_string(),
    })
}

fn cmd_counts(p: u64, m: u32, n: u64, format: Format) -> Result<(), Failure> {
    let counts = code_counts(p, m, n)?;
    match format {
        Format::Text => println!("{}", csv_row(&counts)),
        Format::Json => {
            let mut doc = row_json(&counts);
            let object = doc.as_object_mut().expect("row_json builds an object");
            object.insert("p".into(), p.into());
            object.insert("m".into(), m.into());
            println!("{doc}");
        }
    }
    Ok(())
}

/// Fields of the published row that disagree with the computed one, in
/// column order; `None` when the published table has no row for n.
fn diff_fields(counts: &CodeCounts) -> Option<Vec<&'static str>> {
    let &(_, gamma, delta, trivial, nontrivial, self_dual) = reference::published_row(counts.n)?;
    let mut fields = Vec::new();
    if counts.gamma != gamma {
        fields.push("gamma");
    }
    if counts.delta != delta {
        fields.push("delta");
    }
    if counts.trivial_so != BigUint::from(trivial) {
        fields.push("N_t");
    }
    if counts.nontrivial_so != BigUint::from(nontrivial) {
        fields.push("N_n");
    }
    if counts.self_dual_formula != BigUint::from(self_dual) {
        fields.push("N_sd");
    }
    Some(fields)
}

fn compute_rows(p: u64, m: u32, lengths: &[u64], jobs: usize) -> Result<Vec<CodeCounts>, Failure> {
    let jobs = jobs.max(1).min(lengths.len().max(1));
    if jobs == 1 {
        return lengths
            .iter()
            .map(|&n| code_counts(p, m, n).map_err(Failure::from))
            .collect();
    }
    let slots: Mutex<Vec<Option<Result<CodeCounts, Error>>>> =
        Mutex::new(vec![None; lengths.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= lengths.len() {
                    break;
                }
                let outcome = code_counts(p, m, lengths[i]);
                slots.lock().expect("no panics while holding the lock")[i] = Some(outcome);
            });
        }
    });
    slots
        .into_inner()
        .expect("all workers joined")
        .into_iter()
        .map(|slot| slot.expect("every index was visited").map_err(Failure::from))
        .collect()
}

fn cmd_table(
    p: u64,
    m: u32,
    n_max: u64,
    diff_paper: bool,
    jobs: usize,
    format: Format,
) -> Result<(), Failure> {
    RingParams::new(p, m)?;
    if diff_paper && (p != 2 || m != 3) {
        return Err(Failure::Usage(
            "--diff-paper compares against a published Z_8 table and requires --p 2 --m 3"
                .into(),
        ));
    }
    let lengths: Vec<u64> = (1..=n_max).step_by(2).filter(|n| n % p != 0).collect();
    let rows = compute_rows(p, m, &lengths, jobs)?;
    match format {
        Format::Text => {
            for row in &rows {
                let mut line = csv_row(row);
                if diff_paper {
                    if let Some(fields) = diff_fields(row) {
                        if !fields.is_empty() {
                            line.push_str(",diff:");
                            line.push_str(&fields.join(";"));
                        }
                    }
                }
                println!("{line}");
            }
        }
        Format::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut doc = row_json(row);
                    if diff_paper {
                        if let Some(fields) = diff_fields(row) {
                            if !fields.is_empty() {
                                doc.as_object_mut()
                                    .expect("row_json builds an object")
                                    .insert("diff".into(), fields.into());
                            }
                        }
                    }
                    doc
                })
                .collect();
            let doc = serde_json::json!({
                "p": p,
                "m": m,
                "n_max": n_max,
                "rows": rows_json,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn parse_profile(raw: &str) -> Result<Vec<u32>, Failure> {
    raw.split(',')
        .map(|token| {
            token.trim().parse::<u32>().map_err(|_| {
                Failure::Usage(format!(
                    "--profile expects comma-separated exponents, got {raw:?}"
                ))
            })
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    p: u64,
    m: u32,
    n: u64,
    filter: FilterArg,
    form: FormArg,
    profile: Option<String>,
    limit: Option<u64>,
    format: Format,
) -> Result<(), Failure> {
    let ring = RingParams::new(p, m)?;
    let basis = FactorBasis::new(ring, n, ModulusKind::Shifted)?;
    let generator_form: GeneratorForm = form.into();

    let selected: Vec<ExponentProfile<'_>> = if let Some(raw) = profile {
        vec![ExponentProfile::new(&basis, parse_profile(&raw)?)?]
    } else {
        let budget = budgets()?;
        let space = profile_space_size(&basis);
        if space > BigUint::from(budget.profiles) {
            return Err(Failure::Domain(Error::BudgetExceeded {
                required: space,
                budget: budget.profiles,
            }));
        }
        let profiles = enumerate_profiles(&basis, filter.into());
        match limit {
            Some(limit) => profiles.take(limit as usize).collect(),
            None => profiles.collect(),
        }
    };

    match format {
        Format::Text => {
            for pr in &selected {
                println!("{pr} {}", pr.generator_polynomial(generator_form)?);
            }
        }
        Format::Json => {
            let codes = selected
                .iter()
                .map(|pr| {
                    Ok(serde_json::json!({
                        "exponents": pr.exponents(),
                        "generator": pr.generator_polynomial(generator_form)?.to_string(),
                    }))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let basis_order: Vec<String> = (0..basis.len())
                .map(|k| {
                    let role = if basis.is_self_paired(k) {
                        "self_reciprocal"
                    } else {
                        "pair"
                    };
                    format!("{role} {}", basis.factor(k))
                })
                .collect();
            let doc = serde_json::json!({
                "p": p,
                "m": m,
                "n": n,
                "filter": filter.name(),
                "form": form.name(),
                "basis_order": basis_order,
                "codes": codes,
            });
            println!("{doc}");
        }
    }
    Ok(())
}

fn cmd_verify(p: u64, m: u32, n: u64, format: Format) -> Result<ExitCode, Failure> {
    let budget = budgets()?;
    let report = crosscheck(p, m, n, budget)?;
    match format {
        Format::Text => {
            for check in &report.checks {
                let status = if check.pass { "PASS" } else { "FAIL" };
                println!("{status} {}: {}", check.name, check.detail);
            }
        }
        Format::Json => {
            let checks: Vec<serde_json::Value> = report
                .checks
                .iter()
                .map(|check| {
                    serde_json::json!({
                        "name": check.name,
                        "pass": check.pass,
                        "detail": check.detail,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "p": p,
                "m": m,
                "n": n,
                "all_pass": report.all_pass(),
                "checks": checks,
            });
            println!("{doc}");
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
