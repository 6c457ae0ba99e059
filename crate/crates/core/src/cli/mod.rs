//! Command-line front end.
//!
//! Every subcommand is a pure function from parsed arguments to bytes on a
//! writer, so the binary stays a thin shell and tests can drive the same code.

mod cache;

pub use cache::{MemoCache, CACHE_VERSION};

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::boxfn::{sample_singular, SingularFn};
use crate::error::{Error, Result};
use crate::exact::{ExactRational, Integer};
use crate::fibrep::{graph_g, sample_q, RTable, MAX_GRAPH_DEPTH};
use crate::oplus::{b_pair, b_pair_index, sample_g, BTable};
use crate::sigma_binet::{conjecture_report, s_f_table, CSigmaTable};
use crate::stern::{stern_index, stern_pair, SternTable};
use crate::verify::{checks, run_check, CheckOutcome};

/// Largest index `seq` emits for most sequences.
pub const MAX_SEQ_INDEX: u64 = 1_000_000;
/// Largest index `seq c` emits; `c` is summed term by term.
pub const MAX_C_INDEX: u64 = 10_000;
pub const VERIFY_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "diatomic", version, about = "Exact Stern-type sequences, bijections and identity sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a range of a sequence as `n,value` rows.
    Seq(SeqArgs),
    /// Run a named property sweep, or `all`, or `list` to show the registry.
    Verify(VerifyArgs),
    /// Sample a singular function to CSV, or draw the representation graph.
    Plot(PlotArgs),
    /// Map between indices and consecutive pairs.
    Bijection(BijectionArgs),
    /// Sweep the open conjectures and print a JSON report.
    Conjectures(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    Stern,
    B,
    R,
    Sf,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    pub name: SeqName,
    #[arg(long, default_value_t = 0)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    #[arg(long, value_enum, default_value_t = SeqFormat::Csv)]
    pub format: SeqFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Memo file reused and extended across runs.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: String,
    /// Overrides the suite's default bound.
    #[arg(long)]
    pub bound: Option<u64>,
    /// Worker threads; `0` uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotTarget {
    /// The box function on `k/2^depth`.
    F,
    /// The question-mark function at the images of the same grid.
    Qm,
    /// The box analogue built from `b`.
    G,
    /// The Fibonacci analogue on `k/F_depth`.
    #[value(name = "Q")]
    Q,
    /// The representation graph down to words of length `depth`.
    Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    pub target: PlotTarget,
    #[arg(long, default_value_t = 8)]
    pub depth: u32,
    /// Defaults to SVG for the graph and CSV otherwise.
    #[arg(long, value_enum)]
    pub format: Option<PlotFormat>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write vertex values next to the graph nodes.
    #[arg(long)]
    pub labels: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairKind {
    Stern,
    Oplus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    #[value(name = "toPair")]
    ToPair,
    #[value(name = "toIndex")]
    ToIndex,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    pub kind: PairKind,
    pub direction: Direction,
    /// One index, or the two entries of a pair.
    #[arg(required = true, num_args = 1..=2)]
    pub values: Vec<BigInt>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, default_value_t = 2000)]
    pub bound: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` and runs the command; returns the process exit code.
///
/// `0` success, `1` a verification found a failing instance, `2` bad input or I/O.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Seq(a) => {
            let text = cmd_seq(a.name, a.from, a.to, a.format, a.cache.as_deref())?;
            emit(a.out.as_deref(), stdout, text.as_bytes())?;
            Ok(0)
        }
        Command::Verify(a) => {
            let (text, ok) = cmd_verify(&a.suite, a.bound, a.jobs, a.format)?;
            emit(a.out.as_deref(), stdout, text.as_bytes())?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Plot(a) => {
            let text = cmd_plot(a.target, a.depth, a.format, a.labels)?;
            emit(a.out.as_deref(), stdout, text.as_bytes())?;
            Ok(0)
        }
        Command::Bijection(a) => {
            let text = cmd_bijection(a.kind, a.direction, &a.values)?;
            emit(None, stdout, text.as_bytes())?;
            Ok(0)
        }
        Command::Conjectures(a) => {
            let mut text = conjecture_report(a.bound)?.to_json();
            text.push('\n');
            emit(a.out.as_deref(), stdout, text.as_bytes())?;
            Ok(0)
        }
    }
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            w.write_all(bytes)?;
            w.flush()?;
        }
        None => {
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

impl SeqName {
    pub fn key(self) -> &'static str {
        match self {
            SeqName::Stern => "stern",
            SeqName::B => "b",
            SeqName::R => "r",
            SeqName::Sf => "sf",
            SeqName::C => "c",
        }
    }

    fn first_index(self) -> u64 {
        match self {
            SeqName::B | SeqName::C => 1,
            _ => 0,
        }
    }

    fn max_index(self) -> u64 {
        match self {
            SeqName::C => MAX_C_INDEX,
            _ => MAX_SEQ_INDEX,
        }
    }
}

/// Values at indices `0..=to`; slot `0` of `b` and `c` holds `0`.
pub fn seq_table(name: SeqName, to: u64) -> Result<Vec<Integer>> {
    let to = to as usize;
    let lift = |v: &crate::exact::Natural| BigInt::from(v.clone());
    Ok(match name {
        SeqName::Stern => SternTable::new(to).as_slice().iter().map(lift).collect(),
        SeqName::B => {
            let t = BTable::new(to)?;
            std::iter::once(BigInt::from(0)).chain((1..=to).map(|n| lift(t.get(n)))).collect()
        }
        SeqName::R => {
            let t = RTable::new(to);
            (0..=to).map(|n| lift(t.get(n))).collect()
        }
        SeqName::Sf => s_f_table(to).into_iter().map(BigInt::from).collect(),
        SeqName::C => CSigmaTable::exact(to)?.as_slice().to_vec(),
    })
}

/// `(n, value)` for `from ..= to`, read from and written back to `cache` when given.
pub fn seq_values(name: SeqName, from: u64, to: u64, cache: Option<&Path>) -> Result<Vec<(u64, Integer)>> {
    if from > to {
        return Err(Error::Domain(format!("--from {from} exceeds --to {to}")));
    }
    if from < name.first_index() {
        return Err(Error::Domain(format!("{} starts at index {}", name.key(), name.first_index())));
    }
    if to > name.max_index() {
        return Err(Error::RangeTooLarge(format!("{} is limited to index {}", name.key(), name.max_index())));
    }
    let table = match cache {
        None => seq_table(name, to)?,
        Some(path) => {
            let mut memo = MemoCache::load(path)?;
            match memo.get(name.key(), to as usize) {
                Some(t) => t[..=to as usize].to_vec(),
                None => {
                    let t = seq_table(name, to)?;
                    memo.insert(name.key(), t.clone());
                    memo.save(path)?;
                    t
                }
            }
        }
    };
    Ok((from..=to).map(|n| (n, table[n as usize].clone())).collect())
}

pub fn cmd_seq(name: SeqName, from: u64, to: u64, format: SeqFormat, cache: Option<&Path>) -> Result<String> {
    let rows = seq_values(name, from, to, cache)?;
    let mut out = String::new();
    match format {
        SeqFormat::Csv => {
            out.push_str("n,value\n");
            for (n, v) in &rows {
                let _ = writeln!(out, "{n},{v}");
            }
        }
        SeqFormat::Json => {
            // Values are written as bare integers of any length, which serde_json cannot hold.
            out.push('[');
            for (i, (n, v)) in rows.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "[{n},{v}]");
            }
            out.push_str("]\n");
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    schema_version: u32,
    suite: &'a str,
    passed: bool,
    outcomes: &'a [CheckOutcome],
}

/// Runs one check or all of them; the flag is true when nothing failed.
pub fn cmd_verify(suite: &str, bound: Option<u64>, jobs: usize, format: ReportFormat) -> Result<(String, bool)> {
    if suite == "list" {
        let mut out = String::new();
        for c in checks() {
            let _ = writeln!(out, "{:<24} default bound {:<8} {}", c.id, c.default_bound, c.description);
        }
        return Ok((out, true));
    }
    let outcomes = if suite == "all" {
        if bound.is_some() {
            return Err(Error::Domain("--bound applies to a single suite, not all".into()));
        }
        checks().iter().map(|c| run_check(c.id, None, jobs)).collect::<Result<Vec<_>>>()?
    } else {
        vec![run_check(suite, bound, jobs)?]
    };
    let passed = outcomes.iter().all(CheckOutcome::passed);
    let text = match format {
        ReportFormat::Json => {
            let report = VerifyReport { schema_version: VERIFY_SCHEMA_VERSION, suite, passed, outcomes: &outcomes };
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for o in &outcomes {
                let verdict = if o.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{verdict} {} bound={} cases={} time={:.1}ms", o.id, o.bound, o.cases, o.wall_time_ms);
                if let Some(f) = &o.failure {
                    let _ = writeln!(s, "  first failure {f}");
                }
                for n in &o.notes {
                    let _ = writeln!(s, "  note: {n}");
                }
            }
            s
        }
    };
    Ok((text, passed))
}

fn samples_csv(samples: &[(ExactRational, ExactRational)]) -> String {
    let mut out = String::from("x,y,x_approx,y_approx\n");
    for (x, y) in samples {
        let (xa, ya) = (x.to_f64().unwrap_or(f64::NAN), y.to_f64().unwrap_or(f64::NAN));
        let _ = writeln!(out, "{x},{y},{xa:.12},{ya:.12}");
    }
    out
}

fn samples_svg(samples: &[(ExactRational, ExactRational)]) -> String {
    let (w, h, pad) = (600.0, 600.0, 20.0);
    let pts: Vec<(f64, f64)> =
        samples.iter().map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0))).collect();
    let xmax = pts.iter().map(|p| p.0).fold(f64::MIN_POSITIVE, f64::max);
    let ymax = pts.iter().map(|p| p.1).fold(f64::MIN_POSITIVE, f64::max);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {:.0} {:.0}" width="{:.0}" height="{:.0}">"#,
        w + 2.0 * pad,
        h + 2.0 * pad,
        w + 2.0 * pad,
        h + 2.0 * pad
    );
    let _ = write!(out, r##"<polyline fill="none" stroke="#1f4e79" stroke-width="1" points=""##);
    for (i, (x, y)) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{:.3},{:.3}", pad + x / xmax * w, pad + h - y / ymax * h);
    }
    out.push_str("\"/>\n</svg>\n");
    out
}

pub fn cmd_plot(target: PlotTarget, depth: u32, format: Option<PlotFormat>, labels: bool) -> Result<String> {
    if target == PlotTarget::Graph {
        if depth as usize > MAX_GRAPH_DEPTH {
            return Err(Error::Domain(format!("graph depth {depth} exceeds {MAX_GRAPH_DEPTH}")));
        }
        let g = graph_g(depth as usize)?;
        return Ok(match format.unwrap_or(PlotFormat::Svg) {
            PlotFormat::Svg => g.to_svg(labels),
            PlotFormat::Csv => {
                let mut out = String::from("length,value,paths,x_approx,y_approx\n");
                let mut vs: Vec<_> = g.vertices().collect();
                vs.sort_by(|a, b| (a.length, &a.value).cmp(&(b.length, &b.value)));
                for v in vs {
                    let (x, y) = v.point.to_f64();
                    let _ = writeln!(out, "{},{},{},{x:.12},{y:.12}", v.length, v.value, v.paths);
                }
                out
            }
        });
    }
    let samples = match target {
        PlotTarget::F => sample_singular(SingularFn::Box, depth)?,
        PlotTarget::Qm => sample_singular(SingularFn::QuestionMark, depth)?,
        PlotTarget::G => sample_g(depth)?,
        PlotTarget::Q => sample_q(u64::from(depth))?,
        PlotTarget::Graph => unreachable!(),
    };
    Ok(match format.unwrap_or(PlotFormat::Csv) {
        PlotFormat::Csv => samples_csv(&samples),
        PlotFormat::Svg => samples_svg(&samples),
    })
}

fn natural_arg(v: &BigInt) -> Result<crate::exact::Natural> {
    v.to_biguint().ok_or_else(|| Error::Domain(format!("{v} is negative")))
}

pub fn cmd_bijection(kind: PairKind, direction: Direction, values: &[BigInt]) -> Result<String> {
    let args = values.iter().map(natural_arg).collect::<Result<Vec<_>>>()?;
    let want = if direction == Direction::ToPair { 1 } else { 2 };
    if args.len() != want {
        return Err(Error::Domain(format!("expected {want} value(s), got {}", args.len())));
    }
    Ok(match (kind, direction) {
        (PairKind::Stern, Direction::ToPair) => {
            let p = stern_pair(args[0].clone());
            format!("{} {}\n", p.left, p.right)
        }
        (PairKind::Stern, Direction::ToIndex) => format!("{}\n", stern_index(args[0].clone(), args[1].clone())?),
        (PairKind::Oplus, Direction::ToPair) => {
            let p = b_pair(args[0].clone())?;
            format!("{} {}\n", p.left, p.right)
        }
        (PairKind::Oplus, Direction::ToIndex) => format!("{}\n", b_pair_index(args[0].clone(), args[1].clone())?),
    })
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    run(std::env::args_os(), &mut out, &mut io::stderr())
}
