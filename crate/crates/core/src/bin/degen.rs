//! `degen`: sequence tables, identity verification, exact evaluation and the
//! Lucas–Lehmer check.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use degen_poly::identities::{run_all_with, RunOptions};
use degen_poly::primality::{lucas_lehmer, mersenne_prime_exponents};
use degen_poly::table::BernoulliMethod;
use degen_poly::{
    BivarPoly, DegenSequenceTable, Error, Execution, Family, IdentityCheck, IdentityId, Rational,
    VerificationReport, DEFAULT_ORDER,
};

/// Environment variable naming a TOML file with default settings.
const CONFIG_ENV: &str = "DEGEN_CONFIG";

const DEFAULT_N_MAX: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "degen",
    version,
    about = "Exact degenerate Bernoulli, dimorphic Mersenne and Bell polynomial toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a sequence table.
    Table {
        /// gff, beta, dimorphic, mersenne, stirling2, bell-triangle or phi
        family: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Construction for `beta`: series, binomial-expansion or mersenne-recurrence
        #[arg(long, default_value = "series")]
        method: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check identities exactly and emit a report.
    Verify {
        /// Identities to check (see `--list`)
        identities: Vec<String>,
        #[arg(long)]
        all: bool,
        /// List identity names and default ranges
        #[arg(long)]
        list: bool,
        /// Upper index for every selected identity
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Evaluate a family member at rational λ and/or x.
    Eval {
        /// gff, beta, dimorphic, mersenne or phi
        family: String,
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Lucas–Lehmer test of 2^p - 1.
    MersennePrime {
        p: Option<u32>,
        /// List every exponent up to this bound whose Mersenne number is prime
        #[arg(long)]
        up_to: Option<u32>,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    order: Option<usize>,
    n_max: Option<usize>,
    format: Option<Format>,
}

/// Effective settings after merging flags over the config file.
struct CliConfig {
    order: usize,
    n_max: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
}

impl CliConfig {
    fn resolve(
        file: &FileConfig,
        order: Option<usize>,
        n_max: Option<usize>,
        format: Option<Format>,
        out: Option<PathBuf>,
    ) -> Self {
        CliConfig {
            order: order.or(file.order).unwrap_or(DEFAULT_ORDER),
            n_max: n_max.or(file.n_max),
            format: format.or(file.format).unwrap_or(Format::Json),
            out,
        }
    }
}

enum Failure {
    Verification,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_file_config() -> Result<FileConfig, Failure> {
    let Some(path) = std::env::var_os(CONFIG_ENV) else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", Path::new(&path).display())))?;
    toml::from_str(&text).map_err(|e| Failure::Usage(format!("bad config file: {e}")))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
        }
    }
}

fn cmd_table(family: &str, method: &str, cfg: CliConfig) -> Result<(), Failure> {
    let family: Family = family.parse()?;
    let method: BernoulliMethod = method.parse()?;
    let n_max = cfg.n_max.unwrap_or(DEFAULT_N_MAX);
    if family == Family::DegenBernoulli && method == BernoulliMethod::Series && cfg.order < n_max {
        return Err(Error::OutOfRange {
            index: n_max,
            order: cfg.order,
        }
        .into());
    }
    let table = DegenSequenceTable::build(family, n_max, method, Execution::default());
    let text = match cfg.format {
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv(),
    };
    emit(cfg.out.as_deref(), &text)
}

fn select_checks(
    names: &[String],
    all: bool,
    n_max: Option<usize>,
) -> Result<Vec<IdentityCheck>, Failure> {
    if all && !names.is_empty() {
        return Err(Failure::Usage(
            "give identity names or --all, not both".into(),
        ));
    }
    if !all && names.is_empty() {
        return Err(Failure::Usage(
            "no identities selected; name some or pass --all".into(),
        ));
    }
    let ids: Vec<IdentityId> = if all {
        IdentityId::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, Error>>()?
    };
    let mut checks = Vec::new();
    for id in ids {
        let (from, default_to) = id.default_range();
        let to = n_max.unwrap_or(default_to);
        if to < from {
            // --all quietly skips identities that start above the bound
            if all {
                continue;
            }
            return Err(Failure::Usage(format!(
                "{id} starts at n = {from}, above --n-max {to}"
            )));
        }
        checks.push(IdentityCheck::new(id, from, to)?);
    }
    Ok(checks)
}

fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("identity,n,pass,residual\n");
    for r in reports {
        let name = serde_json::to_string(&r.identity).expect("identity serializes");
        let name = name.trim_matches('"');
        if let Some(err) = &r.error {
            out.push_str(&format!("{name},,false,\"error: {err}\"\n"));
        }
        for row in &r.results {
            let residual = row
                .residual
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_default();
            out.push_str(&format!("{name},{},{},{residual}\n", row.n, row.pass));
        }
    }
    out
}

fn cmd_verify(
    names: &[String],
    all: bool,
    inject_fault: bool,
    cfg: CliConfig,
) -> Result<(), Failure> {
    let checks = select_checks(names, all, cfg.n_max)?;
    if let Some(c) = checks
        .iter()
        .find(|c| c.id.needs_order() && cfg.order < c.to)
    {
        return Err(Error::OutOfRange {
            index: c.to,
            order: cfg.order,
        }
        .into());
    }
    let opts = RunOptions {
        order: cfg.order,
        corrupt_beta: inject_fault.then_some(1),
        ..RunOptions::default()
    };
    let reports = run_all_with(&checks, &opts);
    let text = match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string(&reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => reports_csv(&reports),
    };
    emit(cfg.out.as_deref(), &text)?;

    let mut ok = true;
    for r in &reports {
        if let Some(err) = &r.error {
            eprintln!("FAIL {}: {err}", r.identity);
            ok = false;
            continue;
        }
        for row in r.results.iter().filter(|row| !row.pass) {
            let residual = row
                .residual
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_default();
            eprintln!("FAIL {} n={}: residual {residual}", r.identity, row.n);
        }
        if r.all_pass {
            let (first, last) = (r.results[0].n, r.results[r.results.len() - 1].n);
            eprintln!("pass {} n={first}..={last}", r.identity);
        } else {
            ok = false;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_eval(family: &str, n: usize, lambda: Option<&str>, x: Option<&str>) -> Result<(), Failure> {
    let lambda: Option<Rational> = lambda.map(str::parse).transpose()?;
    let x: Option<Rational> = x.map(str::parse).transpose()?;
    let family: Family = family.parse()?;
    let value = match family {
        Family::FallingFactorial => degen_poly::degenerate::gff(&BivarPoly::x(), n),
        Family::DegenBernoulli => degen_poly::degenerate::degen_bernoulli_by_series(n, n)?,
        Family::DimorphicMersenne => degen_poly::degenerate::dimorphic_mersenne(n),
        Family::Mersenne => BivarPoly::constant(Rational::from_integer(
            degen_poly::degenerate::mersenne(n as u32),
        )),
        Family::Phi => degen_poly::bell::bell_polynomial(n),
        Family::Stirling2 | Family::BellTriangle => {
            return Err(Failure::Usage(format!(
                "`{family}` is a triangle; use `table`"
            )));
        }
    };
    let value = value.substitute(lambda.as_ref(), x.as_ref());
    let text = match value.as_constant() {
        Some(c) => format!("{c}\n"),
        None => format!("{value}\n"),
    };
    emit(None, &text)
}

fn cmd_mersenne_prime(p: Option<u32>, up_to: Option<u32>) -> Result<(), Failure> {
    match (p, up_to) {
        (Some(p), None) => {
            let prime = lucas_lehmer(p)?;
            emit(
                None,
                &format!("{p} {}\n", if prime { "prime" } else { "composite" }),
            )
        }
        (None, Some(bound)) => {
            let list = mersenne_prime_exponents(bound, Execution::default());
            let text: String = list.iter().map(|p| format!("{p}\n")).collect();
            emit(None, &text)
        }
        _ => Err(Failure::Usage("give exactly one of <P> or --up-to".into())),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let file = load_file_config()?;
    match cli.command {
        Command::Table {
            family,
            n_max,
            method,
            order,
            format,
            out,
        } => cmd_table(
            &family,
            &method,
            CliConfig::resolve(&file, order, n_max, format, out),
        ),
        Command::Verify {
            identities,
            all,
            list,
            n_max,
            order,
            format,
            out,
            inject_fault,
        } => {
            if list {
                let text: String = IdentityId::ALL
                    .iter()
                    .map(|id| {
                        let (a, b) = id.default_range();
                        format!("{id} {a}..={b}\n")
                    })
                    .collect();
                return emit(None, &text);
            }
            cmd_verify(
                &identities,
                all,
                inject_fault,
                CliConfig::resolve(&file, order, n_max, format, out),
            )
        }
        Command::Eval {
            family,
            n,
            lambda,
            x,
        } => cmd_eval(&family, n, lambda.as_deref(), x.as_deref()),
        Command::MersennePrime { p, up_to } => cmd_mersenne_prime(p, up_to),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
