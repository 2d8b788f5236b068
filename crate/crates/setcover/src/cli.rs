//! The `setcover` command line.
//!
//! Exit codes: 0 success, 1 I/O or runtime failure, 2 usage error, 3 a bound
//! or oracle violation.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use setcover_core::bounds::{cover_size_bound, BoundKind, BoundSeries};
use setcover_core::generate::generate;
use setcover_core::greedy::{complete_cover, run_greedy};
use setcover_core::oracle::{
    check_bound_exhaustive, check_bound_random, check_product_sandwich, exact_min_cover,
    random_schedule, OracleError,
};
use setcover_core::rng::derive_seed;
use setcover_core::{GenSpec, Instance, Model};
use thiserror::Error;

use crate::table::{bounds_csv, cover_size_trailer, experiment_records, records_csv};
use crate::text::{parse_instance, write_instance};
use crate::trace::{to_json, ReportDocument, TraceDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Runtime(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Runtime(_) => 1,
            CliError::Violation(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "setcover",
    version,
    about = "Greedy set cover with coverage-trajectory bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random instance with a minimum column density.
    Gen(GenArgs),
    /// Run greedy (optionally stopped early and patched) and write the trace.
    Solve(SolveArgs),
    /// Tabulate the classical and improved bounds.
    Bounds(BoundsArgs),
    /// Compare greedy's uncovered fraction with both bounds, per step.
    Compare(CompareArgs),
    /// Brute-force minimum cover of a small instance.
    Exact(ExactArgs),
    /// Run an oracle suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    ColumnRegular,
    BernoulliRepair,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::ColumnRegular => Model::ColumnRegular,
            ModelArg::BernoulliRepair => Model::BernoulliRepair,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Classical,
    Improved,
}

impl From<KindArg> for BoundKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Classical => BoundKind::Classical,
            KindArg::Improved => BoundKind::Improved,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Suite {
    ProductInequality,
    Exhaustive,
    Random,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err("must be a positive integer".into()),
    }
}

fn gamma(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v <= 1.0 => Ok(v),
        _ => Err("must be a number in (0, 1]".into()),
    }
}

fn probability(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if (0.0..=1.0).contains(&v) => Ok(v),
        _ => Err("must be a number in [0, 1]".into()),
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = positive)]
    pub m: usize,
    #[arg(long, value_parser = positive)]
    pub n: usize,
    #[arg(long, value_parser = gamma)]
    pub gamma: f64,
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Cell probability for bernoulli-repair.
    #[arg(long, value_parser = probability, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Stop greedy after at most K steps.
    #[arg(long, conflicts_with = "k_star")]
    pub k_max: Option<usize>,
    /// Stop greedy at the step minimizing the chosen cover-size bound.
    #[arg(long, value_enum)]
    pub k_star: Option<KindArg>,
    /// Cover whatever greedy left uncovered.
    #[arg(long)]
    pub patch: bool,
    /// Trace JSON destination (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_parser = gamma)]
    pub gamma: f64,
    #[arg(long, value_parser = positive)]
    pub m: usize,
    /// Last step to tabulate (default m).
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Element count for the cover-size trailer line.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// A single instance file; otherwise instances are generated.
    #[arg(long = "in", conflicts_with_all = ["m", "n", "gamma", "model", "count"])]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = positive)]
    pub m: Option<usize>,
    #[arg(long, value_parser = positive)]
    pub n: Option<usize>,
    #[arg(long, value_parser = gamma)]
    pub gamma: Option<f64>,
    #[arg(long, value_enum, default_value = "column-regular")]
    pub model: ModelArg,
    #[arg(long, value_parser = probability, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// product-inequality: check all 1 <= x <= y <= max-y.
    #[arg(long, default_value_t = 200)]
    pub max_y: usize,
    /// exhaustive: rows.
    #[arg(long)]
    pub m: Option<usize>,
    /// exhaustive: columns.
    #[arg(long)]
    pub n: Option<usize>,
    /// random: number of generated instances.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_parser = positive, default_value_t = 64)]
    pub max_m: usize,
    #[arg(long, value_parser = positive, default_value_t = 256)]
    pub max_n: usize,
    /// Also write the report as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

/// Parses `args`, runs the command, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => cmd_gen(a, stdout),
        Command::Solve(a) => cmd_solve(a, stdout),
        Command::Bounds(a) => cmd_bounds(a, stdout),
        Command::Compare(a) => cmd_compare(a, stdout),
        Command::Exact(a) => cmd_exact(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
    }
}

fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_instance(&text).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit(out: Option<&Path>, contents: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, contents),
        None => stdout
            .write_all(contents.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn say(stdout: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(stdout, "{line}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn cmd_gen(a: GenArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec = GenSpec {
        m: a.m,
        n: a.n,
        gamma: a.gamma,
        model: a.model.into(),
        p: a.p,
        seed: a.seed,
    };
    let inst = generate(&spec).map_err(|e| CliError::Runtime(e.to_string()))?;
    write_file(&a.out, &write_instance(&inst))?;
    let d = inst.density().with_nominal(a.gamma);
    say(
        stdout,
        &format!(
            "m={} n={} model={} seed={} gamma_nominal={} c_effective={} gamma_effective={}",
            inst.m(),
            inst.n(),
            spec.model,
            spec.seed,
            d.gamma_nominal,
            d.c_effective,
            d.gamma_effective
        ),
    )
}

fn cmd_solve(a: SolveArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let inst = read_instance(&a.input)?;
    let k_max = match (a.k_max, a.k_star) {
        (Some(k), _) => Some(k),
        (None, Some(kind)) => {
            let gamma = inst.density().gamma_effective;
            let best = cover_size_bound(gamma, inst.m(), inst.n(), kind.into())
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            Some(best.k_star)
        }
        (None, None) => None,
    };
    let mut trace = run_greedy(&inst, k_max);
    if a.patch {
        trace = complete_cover(&inst, &trace).map_err(|e| CliError::Runtime(e.to_string()))?;
    }
    emit(
        a.out.as_deref(),
        &to_json(&TraceDocument::new(&inst, &trace)),
        stdout,
    )
}

fn cmd_bounds(a: BoundsArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let k_max = a.k_max.unwrap_or(a.m);
    if k_max > a.m {
        return Err(CliError::Usage(format!(
            "--k-max {k_max} exceeds --m {}",
            a.m
        )));
    }
    let series =
        BoundSeries::new(a.gamma, a.m, k_max).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut csv = bounds_csv(&series);
    if let Some(n) = a.n {
        let size = |kind| {
            cover_size_bound(a.gamma, a.m, n, kind).map_err(|e| CliError::Usage(e.to_string()))
        };
        csv.push_str(&cover_size_trailer(
            size(BoundKind::Improved)?,
            size(BoundKind::Classical)?,
        ));
    }
    emit(a.out.as_deref(), &csv, stdout)
}

fn cmd_compare(a: CompareArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (records, instances) = match &a.input {
        Some(path) => {
            let inst = read_instance(path)?;
            (experiment_records(0, &inst, None, None, "file"), 1)
        }
        None => {
            let missing: Vec<&str> = [
                ("--m", a.m.is_none()),
                ("--n", a.n.is_none()),
                ("--gamma", a.gamma.is_none()),
            ]
            .into_iter()
            .filter_map(|(flag, absent)| absent.then_some(flag))
            .collect();
            if !missing.is_empty() {
                return Err(CliError::Usage(format!(
                    "compare needs --in or generator flags; missing {}",
                    missing.join(", ")
                )));
            }
            let mut records = Vec::new();
            for i in 0..a.count {
                let spec = GenSpec {
                    m: a.m.unwrap(),
                    n: a.n.unwrap(),
                    gamma: a.gamma.unwrap(),
                    model: a.model.into(),
                    p: a.p,
                    seed: derive_seed(a.seed, i as u64),
                };
                let inst = generate(&spec).map_err(|e| CliError::Runtime(e.to_string()))?;
                records.extend(experiment_records(
                    i,
                    &inst,
                    Some(spec.gamma),
                    Some(spec.seed),
                    spec.model.name(),
                ));
            }
            (records, a.count)
        }
    };
    emit(a.out.as_deref(), &records_csv(&records), stdout)?;
    let bad = records.iter().filter(|r| !r.within_bounds()).count();
    let summary = format!(
        "{instances} instances, {} records, {bad} bound violations",
        records.len()
    );
    if bad > 0 {
        return Err(CliError::Violation(summary));
    }
    if a.out.is_some() {
        say(stdout, &summary)?;
    }
    Ok(())
}

fn cmd_exact(a: ExactArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let inst = read_instance(&a.input)?;
    let (size, rows) = exact_min_cover(&inst).map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<String> = rows.iter().map(usize::to_string).collect();
    say(stdout, &format!("size {size}"))?;
    say(stdout, &format!("rows {}", rows.join(" ")))
}

fn cmd_verify(a: VerifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (summary, doc) = match a.suite {
        Suite::ProductInequality => {
            let report = check_product_sandwich(a.max_y);
            (report.to_string(), ReportDocument::from_sandwich(&report))
        }
        Suite::Exhaustive => {
            let (Some(m), Some(n)) = (a.m, a.n) else {
                return Err(CliError::Usage("exhaustive suite needs --m and --n".into()));
            };
            let report = check_bound_exhaustive(m, n).map_err(|e| match e {
                OracleError::TooLarge { .. } | OracleError::BadArgs(_) => {
                    CliError::Usage(e.to_string())
                }
            })?;
            (
                report.to_string(),
                ReportDocument::from_oracle("exhaustive", &report),
            )
        }
        Suite::Random => {
            let specs = random_schedule(a.count, a.seed, a.max_m, a.max_n);
            let report =
                check_bound_random(&specs).map_err(|e| CliError::Runtime(e.to_string()))?;
            (
                report.to_string(),
                ReportDocument::from_oracle("random", &report),
            )
        }
    };
    if let Some(path) = &a.json {
        write_file(path, &to_json(&doc))?;
    }
    say(stdout, &summary)?;
    if doc.pass {
        Ok(())
    } else {
        Err(CliError::Violation(format!("{} suite failed", doc.suite)))
    }
}
