//! The `walkspec` command-line front end.
//!
//! Four subcommands share one output convention: `human` text, `json-lines`
//! (one self-contained record per line, every number a decimal string, a
//! top-level `"schema": "walkspec/1"`), or `csv` with a header row. The exit
//! code is a pure function of the outcome, see [`ExitStatus`].

mod records;

use std::ffi::OsString;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cospectral::{
    certificate_to_json, group_by_generalized_spectrum, sweep_order, verify_pair, BoundReport, GcmCertificate,
    MateGroup,
};
use crate::error::Error;
use crate::graph::{isomorphism_classes, parse_graph6, Graph, Shard};
use crate::spectral::analyze;
use records::{AnalysisRecord, ErrorRecord, GroupRecord, GroupSummaryRecord, SweepRecord, VerdictRecord};

/// Environment variable overriding the worker count of the thread pool.
pub const WORKERS_ENV: &str = "WALKSPEC_WORKERS";

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitStatus {
    /// Success, or a certified pair of non-isomorphic mates.
    Ok = 0,
    Usage = 1,
    Parse = 2,
    NotCospectral = 3,
    Isomorphic = 4,
    /// A certificate failed, a sweep found a violation, or an internal check broke.
    Invariant = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// Exit status of `certify` for a given certification outcome.
    pub fn for_certificate(outcome: &Result<GcmCertificate, Error>) -> ExitStatus {
        match outcome {
            Ok(cert) if cert.is_mate() => ExitStatus::Ok,
            Ok(cert) if cert.is_valid() && cert.is_permutation => ExitStatus::Isomorphic,
            Ok(_) => ExitStatus::Invariant,
            Err(Error::NotCospectral) => ExitStatus::NotCospectral,
            Err(Error::Graph6 { .. }) => ExitStatus::Parse,
            Err(_) => ExitStatus::Invariant,
        }
    }

    fn verdict(self) -> &'static str {
        match self {
            ExitStatus::Ok => "mate",
            ExitStatus::Usage => "usage",
            ExitStatus::Parse => "parse-error",
            ExitStatus::NotCospectral => "not-cospectral",
            ExitStatus::Isomorphic => "isomorphic",
            ExitStatus::Invariant => "invalid",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    JsonLines,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "walkspec",
    version,
    about = "Walk-matrix arithmetic and generalized cospectral mate certificates for small graphs",
    after_help = "Set WALKSPEC_WORKERS to fix the number of worker threads."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Walk-matrix determinant, factorization, family membership and mate bound per graph.
    Analyze {
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// graph6 file, one graph per line; `-` or nothing reads stdin.
        input: Option<PathBuf>,
    },
    /// Certify a pair of graphs through Q = W(G) W(H)^-1.
    Certify {
        graph_a: String,
        graph_b: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Exhaustively check the mate bound for every graph of one order.
    Sweep {
        #[arg(long)]
        order: usize,
        /// Process only shard INDEX of TOTAL (groups are dealt round-robin).
        #[arg(long, default_value = "0/1")]
        shard: Shard,
        /// Permit order 7, which takes much longer.
        #[arg(long)]
        allow_long: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Group graphs by generalized spectrum.
    Group {
        /// Enumerate every graph of this order instead of reading a file.
        #[arg(long, conflicts_with = "input")]
        order: Option<usize>,
        /// Also list groups with a single member.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// graph6 file; `-` or nothing reads stdin.
        input: Option<PathBuf>,
    },
}

/// Entry point used by the binary: real stdin, stdout and stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitStatus::Usage } else { ExitStatus::Ok };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code.code();
        }
    };

    let pool = match worker_pool() {
        Ok(pool) => pool,
        Err(msg) => {
            let _ = writeln!(err, "walkspec: {msg}");
            return ExitStatus::Usage.code();
        }
    };
    let result = dispatch(cli.command, &pool, stdin, out, err);
    match result.and_then(|status| out.flush().map(|_| status)) {
        Ok(status) => status.code(),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitStatus::Ok.code(),
        Err(e) => {
            let _ = writeln!(err, "walkspec: {e}");
            ExitStatus::Invariant.code()
        }
    }
}

fn worker_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(raw) = std::env::var_os(WORKERS_ENV) {
        let workers = raw
            .to_str()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&w| w > 0)
            .ok_or_else(|| format!("{WORKERS_ENV} must be a positive integer, got {raw:?}"))?;
        builder = builder.num_threads(workers);
    }
    builder.build().map_err(|e| e.to_string())
}

fn dispatch(
    command: Command,
    pool: &rayon::ThreadPool,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    match command {
        Command::Analyze { format, input } => {
            let text = match read_input(input.as_ref(), stdin) {
                Ok(text) => text,
                Err(e) => return usage(err, e),
            };
            cmd_analyze(&text, format, out)
        }
        Command::Certify { graph_a, graph_b, format } => cmd_certify(&graph_a, &graph_b, format, out, err),
        Command::Sweep { order, shard, allow_long, format } => {
            let report = pool.install(|| sweep_order(order, shard, allow_long));
            cmd_sweep(report, order, allow_long, shard, format, out, err)
        }
        Command::Group { order, all, format, input } => {
            let graphs = match order {
                Some(n) => match pool.install(|| isomorphism_classes(n)) {
                    Ok(g) => g.into_iter().map(Ok).collect(),
                    Err(e) => return usage(err, e),
                },
                None => match read_input(input.as_ref(), stdin) {
                    Ok(text) => parse_lines(&text),
                    Err(e) => return usage(err, e),
                },
            };
            cmd_group(pool, graphs, all, format, out, err)
        }
    }
}

fn usage(err: &mut dyn Write, e: impl std::fmt::Display) -> io::Result<ExitStatus> {
    writeln!(err, "walkspec: {e}")?;
    Ok(ExitStatus::Usage)
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn BufRead) -> io::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::File::open(p)
                .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", p.display())))?
                .read_to_string(&mut text)?;
        }
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// Parses non-blank lines, keeping 1-based line numbers for error records.
fn parse_lines(text: &str) -> Vec<Result<Graph, (usize, Error)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

fn cmd_analyze(text: &str, format: Format, out: &mut dyn Write) -> io::Result<ExitStatus> {
    let mut status = ExitStatus::Ok;
    let mut csv = (format == Format::Csv).then(|| records::csv_writer(AnalysisRecord::CSV_HEADER));
    for (index, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = index + 1;
        let record = match parse_graph6(line) {
            Ok(g) => {
                let (info, class) = analyze(&g);
                Ok(AnalysisRecord::new(line_no, &g, &info, &class))
            }
            Err(e) => {
                status = ExitStatus::Parse;
                Err(ErrorRecord::new(line_no, line, &e))
            }
        };
        match (format, record) {
            (Format::Human, Ok(r)) => r.write_human(out)?,
            (Format::Human, Err(e)) => writeln!(out, "line {}: error: {}", e.line, e.message)?,
            (Format::JsonLines, Ok(r)) => records::write_json(out, &r)?,
            (Format::JsonLines, Err(e)) => records::write_json(out, &e)?,
            (Format::Csv, Ok(r)) => csv.as_mut().expect("csv writer").push(r.csv_row()),
            (Format::Csv, Err(e)) => csv.as_mut().expect("csv writer").push(e.analysis_csv_row()),
        }
    }
    if let Some(csv) = csv {
        csv.finish(out)?;
    }
    Ok(status)
}

fn cmd_certify(a: &str, b: &str, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<ExitStatus> {
    let g = match parse_graph6(a) {
        Ok(g) => g,
        Err(e) => {
            writeln!(err, "walkspec: first graph: {e}")?;
            return Ok(ExitStatus::Parse);
        }
    };
    let h = match parse_graph6(b) {
        Ok(h) => h,
        Err(e) => {
            writeln!(err, "walkspec: second graph: {e}")?;
            return Ok(ExitStatus::Parse);
        }
    };
    // graphs of different orders cannot share a spectrum
    let outcome = if g.order() != h.order() { Err(Error::NotCospectral) } else { verify_pair(&g, &h) };
    let status = ExitStatus::for_certificate(&outcome);
    match (&outcome, format) {
        (Ok(cert), Format::Human) => records::write_certificate_human(out, cert, status.verdict())?,
        (Ok(cert), Format::JsonLines) => writeln!(out, "{}", certificate_to_json(cert))?,
        (Ok(cert), Format::Csv) => {
            let mut csv = records::csv_writer(records::CERTIFICATE_CSV_HEADER);
            csv.push(records::certificate_csv_row(cert, status.verdict()));
            csv.finish(out)?;
        }
        (Err(e), Format::Human) => {
            writeln!(out, "verdict: {}", status.verdict())?;
            writeln!(out, "reason: {e}")?;
        }
        (Err(e), Format::JsonLines) => records::write_json(out, &VerdictRecord::new(a, b, status.verdict(), e))?,
        (Err(e), Format::Csv) => {
            let mut csv = records::csv_writer(records::CERTIFICATE_CSV_HEADER);
            csv.push(records::verdict_csv_row(a, b, status.verdict(), e));
            csv.finish(out)?;
        }
    }
    Ok(status)
}

fn cmd_sweep(
    report: Result<BoundReport, Error>,
    order: usize,
    allow_long: bool,
    shard: Shard,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let report = match report {
        Ok(r) => r,
        Err(e @ Error::UnsupportedOrder { .. }) => {
            let hint = if order == 7 && !allow_long { " (pass --allow-long for order 7)" } else { "" };
            writeln!(err, "walkspec: {e}{hint}")?;
            return Ok(ExitStatus::Usage);
        }
        Err(e) => {
            writeln!(err, "walkspec: {e}")?;
            return Ok(ExitStatus::Invariant);
        }
    };
    let record = SweepRecord::new(&report, shard);
    match format {
        Format::Human => record.write_human(out)?,
        Format::JsonLines => records::write_json(out, &record)?,
        Format::Csv => record.write_csv(out)?,
    }
    Ok(if report.is_clean() { ExitStatus::Ok } else { ExitStatus::Invariant })
}

fn cmd_group(
    pool: &rayon::ThreadPool,
    parsed: Vec<Result<Graph, (usize, Error)>>,
    all: bool,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let mut status = ExitStatus::Ok;
    let mut graphs = Vec::new();
    for item in parsed {
        match item {
            Ok(g) => graphs.push(g),
            Err((line, e)) => {
                status = ExitStatus::Parse;
                match format {
                    Format::JsonLines => records::write_json(out, &ErrorRecord::new(line, "", &e))?,
                    _ => writeln!(err, "walkspec: line {line}: {e}")?,
                }
            }
        }
    }
    let groups: Vec<MateGroup> = match pool.install(|| group_by_generalized_spectrum(graphs)) {
        Ok(groups) => groups,
        Err(e) => {
            writeln!(err, "walkspec: {e}")?;
            return Ok(ExitStatus::Parse);
        }
    };
    let shown: Vec<GroupRecord> = groups
        .iter()
        .enumerate()
        .filter(|(_, g)| all || g.len() >= 2)
        .map(|(i, g)| GroupRecord::new(i + 1, g))
        .collect();
    let summary = GroupSummaryRecord::new(&groups);
    match format {
        Format::Human => {
            summary.write_human(out)?;
            for g in &shown {
                g.write_human(out)?;
            }
        }
        Format::JsonLines => {
            for g in &shown {
                records::write_json(out, g)?;
            }
            records::write_json(out, &summary)?;
        }
        Format::Csv => {
            let mut csv = records::csv_writer(GroupRecord::CSV_HEADER);
            for g in &shown {
                for row in g.csv_rows() {
                    csv.push(row);
                }
            }
            csv.finish(out)?;
        }
    }
    Ok(status)
}
