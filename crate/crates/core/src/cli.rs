//! The `spinorpow` command line.
//!
//! Every subcommand writes one table (CSV by default, JSON on request) and
//! exits with 0 on success, 2 on invalid input, 3 on a numerical-domain error
//! such as a singular torus point, and 4 when a scale guard trips.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;

use crate::characters::{
    character_bn, dim_weyl, ln_character_bn, ln_spinor_character, spinor_character,
};
use crate::error::Error;
use crate::exactalg::{rat_to_f64, BigRat, TorusPoint};
use crate::limitlaw::{
    convergence_csv_table, convergence_table, limit_density, t_from_theta, ThetaVector,
};
use crate::measure::{EvalPoint, MeasureTable, Probability};
use crate::multiplicities::{multiplicity_asymptotic, multiplicity_exact, offsets};
use crate::output::{fmt_f64, indexed, Table};
use crate::rootsys::{lambda_from_s, RescaledWeight, SVector};

pub const MAX_RANK: usize = 4;
pub const MAX_POWER_FLOAT: u64 = 1_000_000;
pub const MAX_POWER_EXACT: u64 = 64;
/// Largest support a full table may enumerate.
pub const MAX_SUPPORT_ROWS: u128 = 250_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_SCALE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "spinorpow", version, about = "Tensor powers of the so(2n+1) spinor: multiplicities, characters, measures and their boundary limit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Override the scale guards (n <= 4; N <= 64 exact tables; N <= 10^6 floating).
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact and asymptotic multiplicities of L^λ in the N-th spinor power.
    Mult {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        power: u64,
        /// Boundary offsets s_1,...,s_n; all of the support when omitted.
        #[arg(long)]
        s: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// A B_n character at a torus point.
    Char {
        #[arg(long)]
        n: usize,
        /// Highest weight in doubled coordinates, e.g. 2,0.
        #[arg(long, conflicts_with = "spinor")]
        lambda: Option<String>,
        /// Use the spinor highest weight (1,...,1).
        #[arg(long)]
        spinor: bool,
        /// Exact torus point y_1,...,y_n as p/q rationals.
        #[arg(long, conflicts_with_all = ["t", "dimension"])]
        y: Option<String>,
        /// Floating log coordinates t_i = ln y_i.
        #[arg(long, conflicts_with = "dimension")]
        t: Option<String>,
        /// Evaluate at t = 0 (the dimension).
        #[arg(long)]
        dimension: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The character measure over the full support, with its total mass.
    Measure {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        power: u64,
        #[arg(long, conflicts_with_all = ["theta", "dimension"])]
        y: Option<String>,
        /// Critical-drift parameters Θ_i = N e^{-2 t_i} (floating mode only).
        #[arg(long, conflicts_with = "dimension")]
        theta: Option<String>,
        #[arg(long)]
        dimension: bool,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[command(flatten)]
        common: Common,
    },
    /// The Plancherel-type measure (character measure at t = 0).
    Plancherel {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        power: u64,
        #[command(flatten)]
        common: Common,
    },
    /// The boundary limit density over all s with s_n <= s-max.
    Limit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        theta: String,
        #[arg(long = "s-max")]
        s_max: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Pre-limit probabilities along the critical drift against the limit.
    Converge {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        theta: String,
        /// Offsets to track; repeat the flag for several.
        #[arg(long, required = true)]
        s: Vec<String>,
        /// Comma-separated powers.
        #[arg(long = "N")]
        powers: String,
        #[command(flatten)]
        common: Common,
    },
    /// Draws from the exact character measure and summarises frequencies.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        power: u64,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        Self { code: EXIT_VALIDATION, message: message.into() }
    }

    fn scale(message: impl Into<String>) -> Self {
        Self { code: EXIT_SCALE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SingularPoint(_) | Error::Numerical(_) => EXIT_NUMERICAL,
            Error::ScaleGuard(_) => EXIT_SCALE,
            _ => EXIT_VALIDATION,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> CliResult<Vec<T>> {
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::validation(format!("cannot parse {what} entry {tok:?}")))
        })
        .collect()
}

fn expect_len<T>(v: Vec<T>, n: usize, what: &str) -> CliResult<Vec<T>> {
    if v.len() != n {
        return Err(CliError::validation(format!("{what} needs {n} entries, got {}", v.len())));
    }
    Ok(v)
}

fn parse_s(raw: &str, n: usize) -> CliResult<SVector> {
    Ok(SVector::new(expect_len(parse_list(raw, "s")?, n, "--s")?)?)
}

fn parse_point(raw: &str, n: usize) -> CliResult<TorusPoint> {
    let pt: TorusPoint = raw.parse().map_err(|e: Error| CliError::validation(e.to_string()))?;
    if pt.rank() != n {
        return Err(CliError::validation(format!("--y needs {n} entries, got {}", pt.rank())));
    }
    Ok(pt)
}

fn parse_theta(raw: &str, n: usize) -> CliResult<ThetaVector> {
    Ok(ThetaVector::new(expect_len(parse_list(raw, "theta")?, n, "--theta")?)?)
}

struct Guard<'a> {
    common: &'a Common,
    warnings: &'a mut dyn Write,
}

impl Guard<'_> {
    fn check(&mut self, ok: bool, what: String) -> CliResult<()> {
        if ok {
            return Ok(());
        }
        if self.common.force {
            writeln!(self.warnings, "warning: {what}; continuing because of --force")?;
            Ok(())
        } else {
            Err(CliError::scale(format!("{what}; pass --force to override")))
        }
    }

    fn rank(&mut self, n: usize) -> CliResult<()> {
        if n == 0 {
            return Err(CliError::validation("--n must be at least 1"));
        }
        self.check(n <= MAX_RANK, format!("rank n = {n} exceeds {MAX_RANK}"))
    }

    fn power(&mut self, power: u64, exact: bool) -> CliResult<()> {
        let cap = if exact { MAX_POWER_EXACT } else { MAX_POWER_FLOAT };
        let mode = if exact { "exact" } else { "floating" };
        self.check(power <= cap, format!("N = {power} exceeds the {mode} cap {cap}"))
    }

    fn support(&mut self, n: usize, power: u64) -> CliResult<()> {
        let rows = num_integer::binomial(power as u128 / 2 + n as u128, n as u128);
        self.check(
            rows <= MAX_SUPPORT_ROWS,
            format!("the support has {rows} rows, above the table cap {MAX_SUPPORT_ROWS}"),
        )
    }
}

struct Emitted {
    table: Table,
    notes: Vec<String>,
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing the artifact to `stdout` or `--out`, diagnostics to `stderr`.
pub fn run_with<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    let config: Vec<String> =
        args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match run(&cli, &config.join(" "), stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run(cli: &Cli, config: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let common = match &cli.command {
        Command::Mult { common, .. }
        | Command::Char { common, .. }
        | Command::Measure { common, .. }
        | Command::Plancherel { common, .. }
        | Command::Limit { common, .. }
        | Command::Converge { common, .. }
        | Command::Sample { common, .. } => common,
    };
    let mut guard = Guard { common, warnings: stderr };
    let emitted = match &cli.command {
        Command::Mult { n, power, s, .. } => cmd_mult(&mut guard, *n, *power, s.as_deref())?,
        Command::Char { n, lambda, spinor, y, t, dimension, .. } => {
            guard.rank(*n)?;
            cmd_char(*n, lambda.as_deref(), *spinor, y.as_deref(), t.as_deref(), *dimension)?
        }
        Command::Measure { n, power, y, theta, dimension, mode, .. } => {
            cmd_measure(&mut guard, *n, *power, y.as_deref(), theta.as_deref(), *dimension, *mode)?
        }
        Command::Plancherel { n, power, .. } => {
            cmd_measure(&mut guard, *n, *power, None, None, true, Mode::Exact)?
        }
        Command::Limit { n, theta, s_max, .. } => {
            guard.rank(*n)?;
            cmd_limit(*n, theta, *s_max)?
        }
        Command::Converge { n, theta, s, powers, .. } => {
            cmd_converge(&mut guard, *n, theta, s, powers)?
        }
        Command::Sample { n, power, y, seed, count, .. } => {
            cmd_sample(&mut guard, *n, *power, y, *seed, *count)?
        }
    };

    let mut notes = emitted.notes;
    notes.push(format!("config: {config}"));
    let mut sink: Box<dyn Write + '_> = match &common.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(&mut *stdout),
    };
    match common.format {
        Format::Csv => emitted.table.write_csv(&mut sink, &notes)?,
        Format::Json => emitted.table.write_json(&mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn cmd_mult(guard: &mut Guard<'_>, n: usize, power: u64, s: Option<&str>) -> CliResult<Emitted> {
    guard.rank(n)?;
    guard.power(power, s.is_some() || power <= MAX_POWER_EXACT)?;
    if s.is_none() {
        guard.support(n, power)?;
    }
    let list = match s {
        Some(raw) => vec![parse_s(raw, n)?],
        None => offsets(n, power),
    };
    let mut header = indexed("s", n);
    header.extend(indexed("lambda", n));
    header.extend(["multiplicity_exact", "multiplicity_asymptotic", "ratio"].map(String::from));
    let mut table = Table::new(header);
    for s in list {
        let lambda = lambda_from_s(power, &s)?;
        let exact = multiplicity_exact(power, &s)?;
        let asym = multiplicity_asymptotic(power, &s)?;
        let ratio = crate::exactalg::big_ln(&exact) - asym.ln();
        let mut row: Vec<String> = s.as_slice().iter().map(u64::to_string).collect();
        row.extend(lambda.coords().iter().map(i64::to_string));
        row.push(exact.to_string());
        row.push(format!("{asym:?}"));
        row.push(if exact == 0u32.into() { String::new() } else { fmt_f64(ratio.exp()) });
        table.push(row);
    }
    Ok(Emitted { table, notes: Vec::new() })
}

fn cmd_char(
    n: usize,
    lambda: Option<&str>,
    spinor: bool,
    y: Option<&str>,
    t: Option<&str>,
    dimension: bool,
) -> CliResult<Emitted> {
    let weight = match (lambda, spinor) {
        (Some(raw), false) => {
            RescaledWeight::new(expect_len(parse_list(raw, "lambda")?, n, "--lambda")?)?
        }
        (None, true) => RescaledWeight::spinor(n),
        _ => return Err(CliError::validation("give exactly one of --lambda or --spinor")),
    };
    if !weight.is_dominant() {
        return Err(Error::NonDominant(weight.coords().to_vec()).into());
    }
    let mut header = indexed("lambda", n);
    header.extend(["value_num", "value_den", "value_float", "ln_value"].map(String::from));
    let mut table = Table::new(header);
    let mut row: Vec<String> = weight.coords().iter().map(i64::to_string).collect();
    let exact: Option<BigRat> = match (y, t, dimension) {
        (Some(raw), None, false) => {
            let pt = parse_point(raw, n)?;
            Some(if spinor {
                spinor_character(n).eval(&pt)?
            } else {
                character_bn(&weight, &pt)?
            })
        }
        (None, None, true) => Some(BigRat::from_integer(dim_weyl(&weight)?.into())),
        (None, Some(raw), false) => {
            let t = expect_len(parse_list::<f64>(raw, "t")?, n, "--t")?;
            let ln = if spinor { ln_spinor_character(&t) } else { ln_character_bn(&weight, &t)? };
            row.extend([String::new(), String::new(), fmt_f64(ln.exp()), fmt_f64(ln)]);
            None
        }
        _ => return Err(CliError::validation("give exactly one of --y, --t or --dimension")),
    };
    if let Some(v) = exact {
        let f = rat_to_f64(&v);
        row.extend([v.numer().to_string(), v.denom().to_string(), fmt_f64(f), fmt_f64(f.ln())]);
    }
    table.push(row);
    Ok(Emitted { table, notes: Vec::new() })
}

fn cmd_measure(
    guard: &mut Guard<'_>,
    n: usize,
    power: u64,
    y: Option<&str>,
    theta: Option<&str>,
    dimension: bool,
    mode: Mode,
) -> CliResult<Emitted> {
    guard.rank(n)?;
    let point = match (mode, y, theta, dimension) {
        (Mode::Exact, Some(raw), None, false) => EvalPoint::Exact(parse_point(raw, n)?),
        (Mode::Exact, None, None, true) => EvalPoint::Dimension,
        (Mode::Exact, _, Some(_), _) => {
            return Err(CliError::validation("--theta is floating-only; use --mode float"))
        }
        (Mode::Float, Some(raw), None, false) => EvalPoint::Log(parse_point(raw, n)?.log_coords()),
        (Mode::Float, None, Some(raw), false) => {
            EvalPoint::Log(t_from_theta(power, &parse_theta(raw, n)?)?)
        }
        (Mode::Float, None, None, true) => {
            return Err(CliError::validation("the dimension point is exact; drop --mode float"))
        }
        _ => return Err(CliError::validation("give exactly one of --y, --theta or --dimension")),
    };
    guard.power(power, point.is_exact())?;
    guard.support(n, power)?;
    let table = MeasureTable::build(n, power, point)?;
    let note = match table.total() {
        Probability::Exact(p) => format!("normalization: {p}"),
        Probability::Float(p) => format!("normalization: {}", fmt_f64(p)),
    };
    Ok(Emitted { table: table.to_table(), notes: vec![note] })
}

fn cmd_limit(n: usize, theta: &str, s_max: u64) -> CliResult<Emitted> {
    let theta = parse_theta(theta, n)?;
    let mut header = indexed("s", n);
    header.extend(indexed("theta", n));
    header.push("p_limit".into());
    let mut table = Table::new(header);
    let mut total = 0.0;
    for s in offsets(n, 2 * s_max) {
        let p = limit_density(&s, &theta)?;
        total += p;
        let mut row: Vec<String> = s.as_slice().iter().map(u64::to_string).collect();
        row.extend(theta.as_slice().iter().map(|&v| fmt_f64(v)));
        row.push(fmt_f64(p));
        table.push(row);
    }
    Ok(Emitted { table, notes: vec![format!("truncated total: {}", fmt_f64(total))] })
}

fn cmd_converge(
    guard: &mut Guard<'_>,
    n: usize,
    theta: &str,
    s: &[String],
    powers: &str,
) -> CliResult<Emitted> {
    guard.rank(n)?;
    let theta = parse_theta(theta, n)?;
    let powers: Vec<u64> = parse_list(powers, "N")?;
    for &p in &powers {
        guard.power(p, false)?;
    }
    let mut s_list = s.iter().map(|raw| parse_s(raw, n)).collect::<CliResult<Vec<_>>>()?;
    s_list.sort();
    s_list.dedup();
    let records = convergence_table(&theta, &s_list, &powers)?;
    Ok(Emitted { table: convergence_csv_table(&records), notes: Vec::new() })
}

fn cmd_sample(
    guard: &mut Guard<'_>,
    n: usize,
    power: u64,
    y: &str,
    seed: u64,
    count: usize,
) -> CliResult<Emitted> {
    guard.rank(n)?;
    guard.power(power, true)?;
    let pt = parse_point(y, n)?;
    let table = MeasureTable::build(n, power, EvalPoint::Exact(pt))?;
    let draws = table.sample(seed, count);
    let counts = table.frequencies(&draws);
    let mut header = indexed("s", n);
    header.extend(["count", "empirical", "probability"].map(String::from));
    let mut out = Table::new(header);
    for (row, c) in table.rows().iter().zip(counts) {
        let mut cells: Vec<String> = row.s.as_slice().iter().map(u64::to_string).collect();
        cells.push(c.to_string());
        cells.push(fmt_f64(c as f64 / count.max(1) as f64));
        cells.push(fmt_f64(row.probability.to_f64()));
        out.push(cells);
    }
    let tv = table.total_variation(&draws);
    debug_assert!(table.total() == Probability::Exact(BigRat::one()));
    Ok(Emitted { table: out, notes: vec![format!("total variation: {}", fmt_f64(tv))] })
}
