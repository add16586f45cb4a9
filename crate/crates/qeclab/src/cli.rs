//! Argument parsing and the four subcommands.
//!
//! Exit codes: 0 success, 1 input or IO error, 2 when a consistency flag
//! fails, a closed form disagrees with the numeric value, or a table row does
//! not match its reference value.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qeclab_core::classify::{classify, ClassifyOptions, SubgraphLimits};
use qeclab_core::spectral::DEFAULT_GRID_POINTS;
use qeclab_core::{FamilySpec, Graph, DEFAULT_CLASS_TOL, DEFAULT_TOL};

use crate::report::{agreement, closed_form_for, render_text, write_report_csv, AnalyzeDocument, ReportRow};
use crate::scan::{scan, write_scan_csv};
use crate::tables::{compute, write_table_csv, TableId};
use crate::{edgelist, numfmt::fmt_sig, CliError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

pub const THREADS_ENV: &str = "QECLAB_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qeclab", version, about = "Quadratic embedding constants of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Tolerances {
    /// Eigensolver and PSD tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// A graph is QE iff its constant is at most this.
    #[arg(long = "class-tol", default_value_t = DEFAULT_CLASS_TOL)]
    pub class_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["input", "family"]))]
pub struct AnalyzeArgs {
    /// Edge-list file (`n m` header, then `u v` per line).
    pub input: Option<PathBuf>,
    /// Family spec such as `theta:2,3,4`, `acb:1,3,3` or `hypercube:3`.
    #[arg(long)]
    pub family: Option<FamilySpec>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub tolerances: Tolerances,
    /// Sample count of the q-grid on [-1, 1].
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(3..))]
    pub grid: usize,
    /// Skip the primary-status search above this many vertices.
    #[arg(long = "max-vertices", default_value_t = SubgraphLimits::default().max_vertices)]
    pub max_vertices: usize,
    /// Skip the primary-status search above this many edges.
    #[arg(long = "max-edges", default_value_t = SubgraphLimits::default().max_edges)]
    pub max_edges: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one graph.
    Analyze(AnalyzeArgs),
    /// Write a family member as an edge list.
    Generate {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute a reference table as CSV.
    Tables {
        #[arg(value_enum)]
        which: TableId,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tolerances: Tolerances,
    },
    /// Compare predicted, conjectured and numeric classes of theta graphs.
    ConjectureScan {
        /// Largest α+β+γ scanned.
        #[arg(long = "max-sum", value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(5..))]
        max_sum: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tolerances: Tolerances,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match configure_threads().and_then(|()| execute(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| CliError::Threads(raw.clone()))?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

pub fn load_edge_list(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    edgelist::parse(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Generate { family, out } => {
            let g = family.generate()?;
            emit(&out, edgelist::write(&g, Some(&family.to_string())).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Tables { which, out, tolerances } => {
            let rows = compute(which, tolerances.tol, tolerances.class_tol)?;
            let mut buf = Vec::new();
            write_table_csv(&rows, &mut buf)?;
            emit(&out, &buf)?;
            let matched = rows.iter().filter(|r| r.matches).count();
            eprintln!("{}: {matched}/{} rows match", which.name(), rows.len());
            for r in rows.iter().filter(|r| !r.matches) {
                eprintln!(
                    "MISMATCH {} row {}: numeric {} expected {}",
                    which.name(),
                    r.label,
                    fmt_sig(r.qec_numeric),
                    fmt_sig(r.expected)
                );
            }
            Ok(if matched == rows.len() { EXIT_OK } else { EXIT_INCONSISTENT })
        }
        Command::ConjectureScan { max_sum, out, tolerances } => {
            let rows = scan(max_sum, tolerances.tol, tolerances.class_tol)?;
            let mut buf = Vec::new();
            write_scan_csv(&rows, &mut buf)?;
            emit(&out, &buf)?;
            let findings: Vec<_> = rows.iter().filter(|r| r.is_finding()).collect();
            for r in &findings {
                eprintln!(
                    "*** FINDING: Θ({},{},{}) predicted {:?}, conjectured {}, numeric qec {} ({})",
                    r.alpha,
                    r.beta,
                    r.gamma,
                    r.verdict,
                    r.conjectured,
                    fmt_sig(r.qec),
                    r.numeric_class
                );
            }
            eprintln!("scanned {} theta graphs, {} finding(s)", rows.len(), findings.len());
            Ok(EXIT_OK)
        }
    }
}

fn analyze(args: AnalyzeArgs) -> Result<i32, CliError> {
    let tol = args.tolerances.tol;
    let (descriptor, g, closed) = match (&args.input, &args.family) {
        (Some(path), None) => (path.display().to_string(), load_edge_list(path)?, None),
        (None, Some(spec)) => (spec.to_string(), spec.generate()?, closed_form_for(spec, tol * 1e-3)),
        _ => unreachable!("clap enforces exactly one source"),
    };
    let components = g.components();
    if components.len() > 1 {
        return Err(CliError::Disconnected(components));
    }
    let opts = ClassifyOptions {
        tol,
        class_tol: args.tolerances.class_tol,
        grid_points: args.grid,
        limits: SubgraphLimits { max_vertices: args.max_vertices, max_edges: args.max_edges },
    };
    let start = Instant::now();
    let report = classify(&g, &opts)?;
    let elapsed = start.elapsed();
    let agrees = agreement(report.qec.value, closed, tol);
    let doc = AnalyzeDocument {
        descriptor: &descriptor,
        report: &report,
        qec_closed_form: closed,
        closed_form_agrees: agrees,
        consistent: report.consistent(),
        seconds: elapsed.as_secs_f64(),
    };
    let bytes = match args.format {
        Format::Text => render_text(&doc).into_bytes(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut buf = Vec::new();
            write_report_csv(&[ReportRow::new(&descriptor, &report, closed, tol, elapsed)], &mut buf)?;
            buf
        }
    };
    emit(&args.out, &bytes)?;
    if !report.consistent() || agrees == Some(false) {
        for f in report.consistency_flags.iter().filter(|f| !f.passed) {
            eprintln!("consistency check failed: {}", f.name);
        }
        if agrees == Some(false) {
            eprintln!("closed form disagrees with the numeric value");
        }
        return Ok(EXIT_INCONSISTENT);
    }
    Ok(EXIT_OK)
}
