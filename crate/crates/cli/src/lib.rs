//! `partk`: compute partition counts, emit tables, cross-check strategies
//! and run the identity and generating-function sweeps.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or
//! configuration error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use partition_core::enumerate::BruteForce;
use partition_core::identities::{self, Evaluation, VerificationReport};
use partition_core::numtheory::{dedekind_psi, divisors, euler_phi, jordan_totient};
use partition_core::partition_fn::{p_closed_with, p_pentagonal, p_recursive, ClosedFormBudget};
use partition_core::qseries::conjecture_report;
use partition_core::relprime::{lambda_inclexcl, lambda_mobius, p_psi};
use partition_core::spt::{spt_nk, spt_total, SptParams};
use partition_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "partk", version, about = "Exact restricted partition counts and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one value per requested point.
    Compute(PointArgs),
    /// Run every strategy for a function and report disagreements.
    OracleDiff(PointArgs),
    /// Check the identity registry over a range of n.
    VerifyIdentities(IdentityArgs),
    /// Compare the conjectured spt generating function with spt.
    GfCheck(GfArgs),
    /// Print a function for every k at each n.
    Table(PointArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Func {
    /// p(n), all partitions of n
    P,
    /// p(n,k), partitions into exactly k parts
    Pk,
    /// spt_(a,b)(n) or spt_(a,b)(n,k)
    Spt,
    /// partitions whose parts share a factor
    Lambda,
    /// relatively prime partitions
    Ppsi,
    /// Euler's totient
    Phi,
    /// Jordan's totient of order 2
    J2,
    /// Dedekind's psi
    Psi,
    /// number of divisors
    D,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Self::P => "p",
            Self::Pk => "pk",
            Self::Spt => "spt",
            Self::Lambda => "lambda",
            Self::Ppsi => "ppsi",
            Self::Phi => "phi",
            Self::J2 => "j2",
            Self::Psi => "psi",
            Self::D => "d",
        }
    }

    fn takes_k(self) -> bool {
        matches!(self, Self::Pk | Self::Spt | Self::Lambda | Self::Ppsi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum StrategyName {
    Recursive,
    Closed,
    Pentagonal,
    Brute,
    Mobius,
    Inclexcl,
}

impl StrategyName {
    pub fn name(self) -> &'static str {
        match self {
            Self::Recursive => "recursive",
            Self::Closed => "closed",
            Self::Pentagonal => "pentagonal",
            Self::Brute => "brute",
            Self::Mobius => "mobius",
            Self::Inclexcl => "inclexcl",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[arg(long = "fn", value_enum)]
    pub func: Func,
    #[arg(long, conflicts_with_all = ["n_lo", "n_hi"])]
    pub n: Option<u64>,
    #[arg(long)]
    pub n_lo: Option<u64>,
    #[arg(long)]
    pub n_hi: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyName>,
    /// Maximum summand count for the closed nested-sum formula.
    #[arg(long)]
    pub budget: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    /// Registry id, e.g. EB-PHI; all identities when omitted.
    #[arg(long)]
    pub identity: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub n_lo: u64,
    #[arg(long, default_value_t = 500)]
    pub n_hi: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GfArgs {
    #[arg(long, default_value_t = 0)]
    pub a: u32,
    #[arg(long, default_value_t = 1)]
    pub b: u32,
    /// Series order N.
    #[arg(long, default_value_t = 30)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// One input to an evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Point {
    pub n: u64,
    /// `None` for totals over all `k`.
    pub k: Option<u64>,
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Settings {
    pub closed: ClosedFormBudget,
    pub brute: BruteForce,
}

pub type EvalFn = fn(&Point, &Settings) -> Result<BigUint, CoreError>;

#[derive(Clone, Copy)]
pub struct Entry {
    pub func: Func,
    pub strategy: Option<StrategyName>,
    pub eval: EvalFn,
}

/// The evaluators behind each `(function, strategy)` pair. The first entry
/// for a function is its default strategy and the reference in oracle diffs.
#[derive(Clone)]
pub struct Registry {
    entries: Vec<Entry>,
}

fn i(v: u64) -> i64 {
    v as i64
}

fn p_closed_total(n: u64, s: &Settings) -> Result<BigUint, CoreError> {
    if n == 0 {
        return Ok(BigUint::from(1u8));
    }
    (1..=n).map(|k| p_closed_with(i(n), i(k), s.closed)).sum()
}

fn per_k_or_total(
    pt: &Point,
    per_k: impl Fn(u64) -> Result<BigUint, CoreError>,
) -> Result<BigUint, CoreError> {
    match pt.k {
        Some(k) => per_k(k),
        None if pt.n == 0 => per_k(1),
        None => (1..=pt.n).map(per_k).sum(),
    }
}

fn brute(v: Result<u64, CoreError>) -> Result<BigUint, CoreError> {
    v.map(BigUint::from)
}

impl Registry {
    pub fn standard() -> Self {
        use Func::*;
        use StrategyName::*;
        let e = |func, strategy, eval| Entry {
            func,
            strategy,
            eval,
        };
        let entries = vec![
            e(P, Some(Recursive), |pt, _| {
                per_k_or_total(&Point { k: None, ..*pt }, |k| Ok(p_recursive(i(pt.n), i(k))))
            }),
            e(P, Some(Closed), |pt, s| p_closed_total(pt.n, s)),
            e(P, Some(Pentagonal), |pt, _| Ok(p_pentagonal(i(pt.n)))),
            e(P, Some(Brute), |pt, s| brute(s.brute.p_total(i(pt.n)))),
            e(Pk, Some(Recursive), |pt, _| {
                per_k_or_total(pt, |k| Ok(p_recursive(i(pt.n), i(k))))
            }),
            e(Pk, Some(Closed), |pt, s| {
                per_k_or_total(pt, |k| p_closed_with(i(pt.n), i(k), s.closed))
            }),
            e(Pk, Some(Brute), |pt, s| per_k_or_total(pt, |k| brute(s.brute.p(i(pt.n), i(k))))),
            e(Spt, Some(Recursive), |pt, _| {
                let params = SptParams::new(pt.a, pt.b);
                match pt.k {
                    Some(k) => Ok(spt_nk(params, i(pt.n), i(k))),
                    None => spt_total(params, i(pt.n)),
                }
            }),
            e(Spt, Some(Brute), |pt, s| match pt.k {
                Some(k) => s.brute.spt_nk(pt.a, pt.b, i(pt.n), i(k)),
                None if pt.n == 0 => Err(CoreError::ZeroArgument { op: "spt_total" }),
                None => s.brute.spt(pt.a, pt.b, i(pt.n)),
            }),
            e(Lambda, Some(Inclexcl), |pt, _| {
                per_k_or_total(pt, |k| Ok(lambda_inclexcl(pt.n, k)))
            }),
            e(Lambda, Some(Mobius), |pt, _| per_k_or_total(pt, |k| lambda_mobius(pt.n, k))),
            e(Lambda, Some(Brute), |pt, s| {
                per_k_or_total(pt, |k| brute(s.brute.lambda(i(pt.n), i(k))))
            }),
            e(Ppsi, Some(Inclexcl), |pt, _| per_k_or_total(pt, |k| Ok(p_psi(pt.n, k)))),
            e(Ppsi, Some(Mobius), |pt, _| {
                per_k_or_total(pt, |k| {
                    if pt.n == 0 {
                        return Ok(p_recursive(0, i(k)));
                    }
                    Ok(p_recursive(i(pt.n), i(k)) - lambda_mobius(pt.n, k)?)
                })
            }),
            e(Ppsi, Some(Brute), |pt, s| {
                per_k_or_total(pt, |k| brute(s.brute.ppsi(i(pt.n), i(k))))
            }),
            e(Phi, None, |pt, _| euler_phi(pt.n).map(BigUint::from)),
            e(J2, None, |pt, _| jordan_totient(2, pt.n)),
            e(Psi, None, |pt, _| dedekind_psi(pt.n)),
            e(D, None, |pt, _| divisors(pt.n).map(|d| BigUint::from(d.len()))),
        ];
        Self { entries }
    }

    /// Replaces (or adds) the evaluator for one `(function, strategy)` pair.
    pub fn with_override(mut self, func: Func, strategy: StrategyName, eval: EvalFn) -> Self {
        match self
            .entries
            .iter_mut()
            .find(|e| e.func == func && e.strategy == Some(strategy))
        {
            Some(entry) => entry.eval = eval,
            None => self.entries.push(Entry {
                func,
                strategy: Some(strategy),
                eval,
            }),
        }
        self
    }

    pub fn strategies(&self, func: Func) -> Vec<Entry> {
        self.entries.iter().filter(|e| e.func == func).copied().collect()
    }

    fn lookup(&self, func: Func, strategy: Option<StrategyName>) -> Result<Entry, String> {
        let all = self.strategies(func);
        match strategy {
            None => all.first().copied().ok_or_else(|| format!("no evaluator for {}", func.name())),
            Some(s) => all.into_iter().find(|e| e.strategy == Some(s)).ok_or_else(|| {
                format!("strategy {} does not apply to --fn {}", s.name(), func.name())
            }),
        }
    }
}

/// A serialized value; absent fields are JSON null and empty CSV cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    #[serde(rename = "fn")]
    pub func: &'static str,
    pub n: u64,
    pub k: Option<u64>,
    pub a: Option<u32>,
    pub b: Option<u32>,
    pub strategy: Option<&'static str>,
    pub value: String,
}

impl Record {
    fn human(&self) -> String {
        let mut args = self.n.to_string();
        if let Some(k) = self.k {
            args.push_str(&format!(",{k}"));
        }
        let head = match (self.a, self.b) {
            (Some(a), Some(b)) => format!("{}_({a},{b})({args})", self.func),
            _ => format!("{}({args})", self.func),
        };
        match self.strategy {
            Some(s) => format!("{head} = {} [{s}]", self.value),
            None => format!("{head} = {}", self.value),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct MismatchRecord {
    #[serde(rename = "fn")]
    func: &'static str,
    n: u64,
    k: Option<u64>,
    a: Option<u32>,
    b: Option<u32>,
    strategy: Option<&'static str>,
    value: String,
    reference_strategy: Option<&'static str>,
    reference_value: String,
}

/// Usage failures carry a message; everything else is an exit code.
enum Failure {
    Usage(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    if jobs == Some(0) {
        return usage("--jobs must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn n_range(args: &PointArgs) -> Result<(u64, u64), Failure> {
    let (lo, hi) = match (args.n, args.n_lo, args.n_hi) {
        (Some(n), _, _) => (n, n),
        (None, lo, Some(hi)) => (lo.unwrap_or(1), hi),
        (None, Some(lo), None) => (lo, lo),
        (None, None, None) => return usage("give --n or --n-lo/--n-hi"),
    };
    if lo > hi {
        return usage(format!("empty range: --n-lo {lo} > --n-hi {hi}"));
    }
    Ok((lo, hi))
}

fn check_exponents(args: &PointArgs) -> Result<(u32, u32), Failure> {
    if args.func == Func::Spt {
        return Ok((args.a.unwrap_or(0), args.b.unwrap_or(1)));
    }
    if args.a.is_some() || args.b.is_some() {
        return usage(format!("--a/--b only apply to --fn spt, not {}", args.func.name()));
    }
    Ok((0, 0))
}

fn settings(args: &PointArgs) -> Settings {
    let mut s = Settings::default();
    if let Some(b) = args.budget {
        s.closed.max_terms = b;
    }
    s
}

fn record(func: Func, pt: &Point, strategy: Option<StrategyName>, value: &BigUint) -> Record {
    let spt = func == Func::Spt;
    Record {
        func: func.name(),
        n: pt.n,
        k: pt.k,
        a: spt.then_some(pt.a),
        b: spt.then_some(pt.b),
        strategy: strategy.map(StrategyName::name),
        value: value.to_string(),
    }
}

/// Writes records in the chosen format through a single writer.
fn emit<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    rows: &[T],
    human: impl Fn(&T) -> String,
) -> Result<(), Failure> {
    match format {
        Format::Human => {
            for r in rows {
                writeln!(out, "{}", human(r))?;
            }
        }
        Format::Json => {
            for r in rows {
                let line = serde_json::to_string(r).map_err(|e| Failure::Usage(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn evaluate_all(
    jobs: Option<usize>,
    points: &[Point],
    entry: Entry,
    s: &Settings,
) -> Result<Vec<BigUint>, Failure> {
    let results: Vec<Result<BigUint, CoreError>> =
        pool(jobs)?.install(|| points.par_iter().map(|pt| (entry.eval)(pt, s)).collect());
    results.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

fn points_for(args: &PointArgs, all_k: bool) -> Result<Vec<Point>, Failure> {
    let (lo, hi) = n_range(args)?;
    let (a, b) = check_exponents(args)?;
    if args.k.is_some() && !args.func.takes_k() {
        return usage(format!("--k does not apply to --fn {}", args.func.name()));
    }
    let mut points = Vec::new();
    for n in lo..=hi {
        match args.k {
            Some(k) => points.push(Point { n, k: Some(k), a, b }),
            None if all_k => {
                for k in 1..=n.max(1) {
                    points.push(Point { n, k: Some(k), a, b });
                }
            }
            None => points.push(Point { n, k: None, a, b }),
        }
    }
    Ok(points)
}

fn cmd_compute(args: &PointArgs, reg: &Registry, out: &mut dyn Write) -> Outcome {
    let entry = reg.lookup(args.func, args.strategy).map_err(Failure::Usage)?;
    let points = points_for(args, args.func == Func::Pk)?;
    let values = evaluate_all(args.output.jobs, &points, entry, &settings(args))?;
    let rows: Vec<Record> = points
        .iter()
        .zip(&values)
        .map(|(pt, v)| record(args.func, pt, entry.strategy, v))
        .collect();
    emit(out, args.output.format, &rows, Record::human)?;
    Ok(EXIT_OK)
}

fn cmd_table(args: &PointArgs, reg: &Registry, out: &mut dyn Write) -> Outcome {
    if !args.func.takes_k() {
        return usage(format!("table needs a per-k function, not {}", args.func.name()));
    }
    if args.k.is_some() {
        return usage("table covers every k; drop --k");
    }
    let entry = reg.lookup(args.func, args.strategy).map_err(Failure::Usage)?;
    let points = points_for(args, true)?;
    let values = evaluate_all(args.output.jobs, &points, entry, &settings(args))?;
    if args.output.format != Format::Human {
        let rows: Vec<Record> = points
            .iter()
            .zip(&values)
            .map(|(pt, v)| record(args.func, pt, entry.strategy, v))
            .collect();
        emit(out, args.output.format, &rows, Record::human)?;
        return Ok(EXIT_OK);
    }
    let width = values.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
    let mut idx = 0;
    let (lo, hi) = n_range(args)?;
    for n in lo..=hi {
        let count = n.max(1) as usize;
        let cells: Vec<String> = values[idx..idx + count]
            .iter()
            .map(|v| format!("{v:>width$}"))
            .collect();
        idx += count;
        writeln!(out, "{n:>4} | {}", cells.join(" "))?;
    }
    Ok(EXIT_OK)
}

fn cmd_oracle_diff(
    args: &PointArgs,
    reg: &Registry,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if matches!(args.func, Func::Phi | Func::J2 | Func::Psi | Func::D) {
        return usage(format!("--fn {} has a single strategy", args.func.name()));
    }
    if args.strategy.is_some() {
        return usage("oracle-diff runs every strategy; drop --strategy");
    }
    let s = settings(args);
    let points = points_for(args, args.func.takes_k())?;
    let entries = reg.strategies(args.func);
    let reference = entries[0];
    let pool = pool(args.output.jobs)?;
    let rows: Vec<Result<Vec<MismatchRecord>, CoreError>> = pool.install(|| {
        points
            .par_iter()
            .map(|pt| {
                let want = (reference.eval)(pt, &s)?;
                let mut bad = Vec::new();
                for e in &entries[1..] {
                    if e.strategy == Some(StrategyName::Brute) && i(pt.n) > s.brute.max_n {
                        continue;
                    }
                    let got = (e.eval)(pt, &s)?;
                    if got != want {
                        let r = record(args.func, pt, e.strategy, &got);
                        bad.push(MismatchRecord {
                            func: r.func,
                            n: r.n,
                            k: r.k,
                            a: r.a,
                            b: r.b,
                            strategy: r.strategy,
                            value: r.value,
                            reference_strategy: reference.strategy.map(StrategyName::name),
                            reference_value: want.to_string(),
                        });
                    }
                }
                Ok(bad)
            })
            .collect()
    });
    let mut mismatches = Vec::new();
    for r in rows {
        mismatches.extend(r?);
    }
    emit(out, args.output.format, &mismatches, |m| {
        let k = m.k.map(|k| format!(",{k}")).unwrap_or_default();
        format!(
            "MISMATCH {}({}{k}): {} = {} but {} = {}",
            m.func,
            m.n,
            m.strategy.unwrap_or("-"),
            m.value,
            m.reference_strategy.unwrap_or("-"),
            m.reference_value
        )
    })?;
    let names: Vec<&str> = entries.iter().filter_map(|e| e.strategy.map(StrategyName::name)).collect();
    writeln!(
        err,
        "oracle-diff {}: {} points, strategies {}, {} mismatches",
        args.func.name(),
        points.len(),
        names.join("/"),
        mismatches.len()
    )?;
    Ok(if mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Debug, Serialize)]
struct EvaluationRow {
    n: u64,
    lhs: Option<String>,
    rhs: Option<String>,
}

impl From<&Evaluation> for EvaluationRow {
    fn from(e: &Evaluation) -> Self {
        Self {
            n: e.n,
            lhs: e.lhs.as_ref().map(ToString::to_string),
            rhs: e.rhs.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Serialize)]
struct ReportRow {
    id: &'static str,
    n_lo: u64,
    n_hi: u64,
    checked: u64,
    passed: bool,
    mismatches: Vec<EvaluationRow>,
    exceptions: Vec<EvaluationRow>,
}

#[derive(Debug, Serialize)]
struct ReportCsvRow {
    id: &'static str,
    n_lo: u64,
    n_hi: u64,
    checked: u64,
    passed: bool,
    mismatches: String,
    exceptions: String,
}

fn join_evals(es: &[Evaluation]) -> String {
    es.iter()
        .map(|e| {
            let r = EvaluationRow::from(e);
            format!(
                "{}:{}:{}",
                r.n,
                r.lhs.unwrap_or_else(|| "undefined".into()),
                r.rhs.unwrap_or_else(|| "undefined".into())
            )
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_verify_identities(args: &IdentityArgs, out: &mut dyn Write) -> Outcome {
    let ids: Vec<&'static str> = match &args.identity {
        Some(id) => vec![identities::find(id)?.id],
        None => identities::registry().iter().map(|c| c.id).collect(),
    };
    let pool = pool(args.output.jobs)?;
    let reports: Vec<Result<VerificationReport, CoreError>> = pool.install(|| {
        ids.par_iter()
            .map(|id| identities::verify(id, args.n_lo, args.n_hi))
            .collect()
    });
    let reports: Vec<VerificationReport> = reports.into_iter().collect::<Result<_, _>>()?;
    let passed = reports.iter().all(VerificationReport::passed);
    match args.output.format {
        Format::Human => {
            for r in &reports {
                let status = if r.passed() { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{:<10} {status:<4} n = {}..{}: {} checked, {} mismatches, {} below window [{} ms]",
                    r.id,
                    r.n_lo,
                    r.n_hi,
                    r.checked,
                    r.mismatches.len(),
                    r.exceptions.len(),
                    r.elapsed.as_millis()
                )?;
                for e in &r.mismatches {
                    writeln!(out, "    mismatch {e}")?;
                }
                for e in &r.exceptions {
                    writeln!(out, "    below window {e}")?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<ReportRow> = reports
                .iter()
                .map(|r| ReportRow {
                    id: r.id,
                    n_lo: r.n_lo,
                    n_hi: r.n_hi,
                    checked: r.checked,
                    passed: r.passed(),
                    mismatches: r.mismatches.iter().map(EvaluationRow::from).collect(),
                    exceptions: r.exceptions.iter().map(EvaluationRow::from).collect(),
                })
                .collect();
            emit(out, Format::Json, &rows, |_| String::new())?;
        }
        Format::Csv => {
            let rows: Vec<ReportCsvRow> = reports
                .iter()
                .map(|r| ReportCsvRow {
                    id: r.id,
                    n_lo: r.n_lo,
                    n_hi: r.n_hi,
                    checked: r.checked,
                    passed: r.passed(),
                    mismatches: join_evals(&r.mismatches),
                    exceptions: join_evals(&r.exceptions),
                })
                .collect();
            emit(out, Format::Csv, &rows, |_| String::new())?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Debug, Serialize)]
struct GfRow {
    a: u32,
    b: u32,
    order: usize,
    n: u64,
    series: String,
    spt: String,
    agree: bool,
}

fn cmd_gf_check(args: &GfArgs, out: &mut dyn Write) -> Outcome {
    if args.b < 1 {
        return usage("--b must be at least 1");
    }
    if args.n < 1 {
        return usage("--n (series order) must be at least 1");
    }
    let report = conjecture_report(args.a, args.b, args.n)?;
    match args.output.format {
        Format::Human => {
            let tag = if report.is_known_case() { "known" } else { "report only" };
            writeln!(out, "{report} [{tag}]")?;
        }
        format => {
            let rows: Vec<GfRow> = report
                .rows
                .iter()
                .map(|r| GfRow {
                    a: report.a,
                    b: report.b,
                    order: report.order,
                    n: r.n,
                    series: r.series.to_string(),
                    spt: r.spt.to_string(),
                    agree: r.agrees(),
                })
                .collect();
            emit(out, format, &rows, |_| String::new())?;
        }
    }
    Ok(if report.is_known_case() && !report.all_agree() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, reg: &Registry, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Compute(a) => cmd_compute(a, reg, out),
        Command::Table(a) => cmd_table(a, reg, out),
        Command::OracleDiff(a) => cmd_oracle_diff(a, reg, out, err),
        Command::VerifyIdentities(a) => cmd_verify_identities(a, out),
        Command::GfCheck(a) => cmd_gf_check(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["partk"];
        full.extend_from_slice(args);
        let code = run(full, &Registry::standard(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn every_function_has_a_default_strategy() {
        let reg = Registry::standard();
        for f in Func::value_variants() {
            assert!(reg.lookup(*f, None).is_ok(), "{f:?}");
        }
    }

    #[test]
    fn human_records() {
        let (code, out, _) = run_str(&["compute", "--fn", "pk", "--n", "11", "--k", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "pk(11,3) = 10 [recursive]\n");
        let (_, out, _) = run_str(&["compute", "--fn", "spt", "--a", "3", "--b", "2", "--n", "5"]);
        assert_eq!(out, "spt_(3,2)(5) = 173 [recursive]\n");
        let (_, out, _) = run_str(&["compute", "--fn", "phi", "--n", "30"]);
        assert_eq!(out, "phi(30) = 8\n");
    }

    #[test]
    fn argument_misuse_is_a_usage_error() {
        assert_eq!(run_str(&["compute", "--fn", "phi", "--n", "3", "--k", "2"]).0, 2);
        assert_eq!(run_str(&["compute", "--fn", "pk", "--n", "3", "--a", "2"]).0, 2);
        assert_eq!(run_str(&["compute", "--fn", "pk", "--n", "3", "--strategy", "mobius"]).0, 2);
        assert_eq!(run_str(&["compute", "--fn", "pk"]).0, 2);
        assert_eq!(run_str(&["compute", "--fn", "pk", "--n-lo", "5", "--n-hi", "2"]).0, 2);
        assert_eq!(run_str(&["compute", "--fn", "nope", "--n", "2"]).0, 2);
        assert_eq!(run_str(&["compute", "--fn", "phi", "--n", "0"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&[]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("oracle-diff"));
    }

    #[test]
    fn closed_budget_refusal_is_reported() {
        let (code, _, err) = run_str(&[
            "compute", "--fn", "pk", "--n", "60", "--k", "8", "--strategy", "closed", "--budget", "10",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("k guard"), "{err}");
    }
}
