//! Command-line front end.
//!
//! Reports go to standard output as JSON (CSV for sweeps), diagnostics to
//! standard error. Exit codes: 0 success, 1 usage or input error,
//! 2 certificate failure or forbidden cycle found by `verify`, 3 degraded output.

pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::degree_extract::{extract_degree_with, DegreeOptions, DEFAULT_MAX_ROUNDS};
use crate::edge_extract::{extract_with, EdgeOptions};
use crate::error::{invalid, Error, Result};
use crate::exec::Execution;
use crate::graph::io::{format_edge_list, read_edge_list, write_edge_list};
use crate::graph::{check_family_free, girth, ForbiddenFamily, Girth, Graph, Verdict};
use crate::hosts::{self, GraphKind, HostGraph};
use crate::oracle::{cherry_check, exact_ex};
use crate::report::{ExtractionReport, InputStats, SCHEMA_VERSION};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CERTIFICATE: u8 = 2;
pub const EXIT_DEGRADED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "girthforge", version, about = "Certified extraction of subgraphs without short cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and certify a host graph.
    Host {
        #[command(subcommand)]
        command: HostCommand,
    },
    /// Run an extractor on an edge list.
    Extract {
        #[command(subcommand)]
        command: ExtractCommand,
    },
    /// Check an edge list against a forbidden family.
    Verify(VerifyArgs),
    /// Exact maximum family-free subgraph, or the cherry count of a bipartite graph.
    Oracle(OracleArgs),
    /// Run an extractor over a family of inputs and fit a log-log slope.
    Sweep(SweepArgs),
    /// Write a generated input graph as an edge list.
    Gen(GenArgs),
}

#[derive(Debug, Subcommand)]
enum HostCommand {
    Build(HostBuildArgs),
}

#[derive(Debug, Subcommand)]
enum ExtractCommand {
    /// Many edges, no even cycle of length 4..=2r.
    Edges(EdgesArgs),
    /// Spanning subgraph of girth >= 2r+2 with large minimum degree.
    Degree(DegreeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// Orthogonality graph of PG(2, q); needs --q.
    Polarity,
    /// Point-line incidence graph of PG(2, q); needs --q.
    Incidence,
    /// Greedy graph of girth >= --girth on --n vertices.
    Greedy,
    /// Bipartite double cover of the greedy graph.
    Cover,
}

#[derive(Debug, Args)]
struct SeedArg {
    /// Base seed; falls back to GIRTHFORGE_SEED, then 0.
    #[arg(long, env = "GIRTHFORGE_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct HostBuildArgs {
    #[arg(long, value_enum)]
    construction: Construction,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    /// Thin to a dense sub-host of order in (k, 2k].
    #[arg(long, value_name = "K")]
    dense: Option<usize>,
    /// Keep the K highest-degree vertices of part A (bipartite hosts).
    #[arg(long, value_name = "K")]
    trim: Option<usize>,
    #[command(flatten)]
    seed: SeedArg,
    /// Edge list destination; metadata goes to PATH.meta.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Edge list: one `u v` pair per line, `#` starts a comment.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// Cycle bound: even cycles up to 2r, or girth at least 2r+2 for degree.
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[command(flatten)]
    seed: SeedArg,
    /// Write the extracted subgraph here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fill timing_ms; the report is then no longer byte-reproducible.
    #[arg(long)]
    timing: bool,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct EdgesArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Random embeddings tried before the fallbacks.
    #[arg(long, default_value_t = 16)]
    trials: usize,
    /// Also exclude odd cycles up to 2r+1.
    #[arg(long)]
    odd_free: bool,
}

#[derive(Debug, Args)]
struct DegreeArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Random colorings tried before the fallbacks.
    #[arg(long, default_value_t = 8)]
    trials: usize,
    /// Resampling rounds per trial before it is marked degraded.
    #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
    max_rounds: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// `even:2r` or `all:L`.
    #[arg(long)]
    family: ForbiddenFamily,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    #[arg(long, default_value = "even:4")]
    family: ForbiddenFamily,
    /// Run the cherry count instead; needs --left.
    #[arg(long, requires = "left")]
    cherry: bool,
    /// Vertices 0..LEFT form part A.
    #[arg(long)]
    left: Option<usize>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    mode: sweep::Mode,
    #[arg(long, value_enum)]
    family_input: sweep::SweepInput,
    /// Sweep points as a:b:step.
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 32)]
    trials: usize,
    #[command(flatten)]
    seed: SeedArg,
    /// Clique-apex inputs: minimum degree.
    #[arg(long, default_value_t = 2)]
    min_deg: usize,
    /// Random inputs: edges per vertex.
    #[arg(long, default_value_t = 4)]
    density: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
    max_rounds: usize,
    /// Fill the wall_ms column.
    #[arg(long)]
    timing: bool,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// star:N, clique-apex:MIN:MAX, complete-bipartite:A:B, gnm:N:M:SEED,
    /// complete:N, cycle:N or path:N.
    #[arg(long)]
    kind: GraphKind,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        // A reader that stops early (`| head`) is not an error.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::CertificateFailure(_) => EXIT_CERTIFICATE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    match cmd {
        Command::Host { command: HostCommand::Build(a) } => host_build(a, out),
        Command::Extract { command: ExtractCommand::Edges(a) } => extract_edges(a, out, err),
        Command::Extract { command: ExtractCommand::Degree(a) } => extract_degree(a, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Oracle(a) => oracle(a, out),
        Command::Sweep(a) => run_sweep(a, out, err),
        Command::Gen(a) => gen(a, out),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct HostReport<'a> {
    schema_version: u32,
    command: &'static str,
    label: &'a str,
    vertices: usize,
    edges: usize,
    certified_family: Option<ForbiddenFamily>,
    girth: Girth,
    min_degree: usize,
    parts: Option<(usize, usize)>,
    degraded: bool,
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> Result<T> {
    v.ok_or_else(|| invalid(format!("{what} needs --{flag}")))
}

fn host_build(a: HostBuildArgs, out: &mut dyn Write) -> Result<u8> {
    let mut host = match a.construction {
        Construction::Polarity => hosts::polarity_graph(need(a.q, "q", "polarity")?)?,
        Construction::Incidence => hosts::incidence_graph_pg2(need(a.q, "q", "incidence")?)?,
        Construction::Greedy | Construction::Cover => {
            let n = need(a.n, "n", "greedy")?;
            let g = need(a.girth, "girth", "greedy")?;
            let base = hosts::greedy_high_girth(n, g, a.seed.seed)?;
            if a.construction == Construction::Cover {
                hosts::double_cover(&base)?
            } else {
                base
            }
        }
    };
    if let Some(k) = a.trim {
        host = host.trim_left(k)?;
    }
    if let Some(k) = a.dense {
        host = hosts::dense_subhost(&host, k)?;
    }
    if let Some(path) = &a.out {
        write_edge_list(&host.graph, path)?;
        std::fs::write(meta_path(path), host.metadata())?;
    }
    emit_json(out, &host_report(&host))?;
    Ok(if host.degraded { EXIT_DEGRADED } else { EXIT_OK })
}

fn host_report(h: &HostGraph) -> HostReport<'_> {
    HostReport {
        schema_version: SCHEMA_VERSION,
        command: "host build",
        label: &h.label,
        vertices: h.order(),
        edges: h.graph.m(),
        certified_family: h.certified_family,
        girth: h.certified_girth,
        min_degree: h.min_degree,
        parts: h.parts(),
        degraded: h.degraded,
    }
}

fn meta_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta");
    PathBuf::from(s)
}

fn exec_for(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn finish_extraction(
    run: &RunArgs,
    graph: &Graph,
    mut report: ExtractionReport,
    start: Instant,
    out: &mut dyn Write,
) -> Result<()> {
    if run.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    if !report.certificate.passed() {
        return Err(Error::CertificateFailure("extractor output failed certification".into()));
    }
    if let Some(path) = &run.out {
        write_edge_list(graph, path)?;
    }
    emit_json(out, &report)
}

fn extract_edges(a: EdgesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let g = read_edge_list(&a.run.input)?;
    let start = Instant::now();
    let opts = EdgeOptions {
        r: a.run.r,
        trials: a.trials,
        seed: a.run.seed.seed,
        odd_free: a.odd_free,
        exec: exec_for(a.run.sequential),
    };
    let (h, report) = extract_with(&g, opts)?;
    writeln!(err, "kept {} of {} edges ({})", h.m(), g.m(), report.method)?;
    finish_extraction(&a.run, &h, report, start, out)?;
    Ok(EXIT_OK)
}

fn extract_degree(a: DegreeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let g = read_edge_list(&a.run.input)?;
    let start = Instant::now();
    let opts = DegreeOptions {
        r: a.run.r,
        trials: a.trials,
        seed: a.run.seed.seed,
        max_rounds: a.max_rounds,
        exec: exec_for(a.run.sequential),
    };
    let (h, report) = extract_degree_with(&g, opts)?;
    let degraded = report.degree.as_ref().is_some_and(|d| d.degraded);
    writeln!(err, "minimum degree {} with {} edges ({})", h.min_degree(), h.m(), report.method)?;
    finish_extraction(&a.run, &h, report, start, out)?;
    if degraded {
        writeln!(err, "warning: resampling hit the round cap; output is degraded")?;
        return Ok(EXIT_DEGRADED);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    command: &'static str,
    input: InputStats,
    family: ForbiddenFamily,
    #[serde(flatten)]
    verdict: Verdict,
    girth: Girth,
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let g = read_edge_list(&a.input)?;
    let verdict = check_family_free(&g, a.family);
    let free = verdict.is_free();
    emit_json(
        out,
        &VerifyReport {
            schema_version: SCHEMA_VERSION,
            command: "verify",
            input: InputStats::of(&g),
            family: a.family,
            verdict,
            girth: girth(&g),
        },
    )?;
    Ok(if free { EXIT_OK } else { EXIT_CERTIFICATE })
}

#[derive(Serialize)]
struct OracleReport {
    schema_version: u32,
    command: &'static str,
    input: InputStats,
    family: ForbiddenFamily,
    value: usize,
    explored: u64,
    witness: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct CherryReport {
    schema_version: u32,
    command: &'static str,
    input: InputStats,
    left: usize,
    #[serde(flatten)]
    verdict: crate::oracle::CherryVerdict,
}

fn oracle(a: OracleArgs, out: &mut dyn Write) -> Result<u8> {
    let g = read_edge_list(&a.input)?;
    if a.cherry {
        let left = need(a.left, "left", "cherry")?;
        let verdict = cherry_check(&g, left)?;
        emit_json(
            out,
            &CherryReport {
                schema_version: SCHEMA_VERSION,
                command: "oracle cherry",
                input: InputStats::of(&g),
                left,
                verdict,
            },
        )?;
        return Ok(EXIT_OK);
    }
    let res = exact_ex(&g, a.family)?;
    emit_json(
        out,
        &OracleReport {
            schema_version: SCHEMA_VERSION,
            command: "oracle",
            input: InputStats::of(&g),
            family: a.family,
            value: res.value,
            explored: res.explored,
            witness: res.witness.iter().map(|&i| g.edge(i)).collect(),
        },
    )?;
    Ok(EXIT_OK)
}

fn run_sweep(a: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let cfg = sweep::SweepConfig {
        mode: a.mode,
        input: a.family_input,
        points: sweep::parse_range(&a.n)?,
        r: a.r,
        trials: a.trials,
        seed: a.seed.seed,
        min_deg: a.min_deg,
        density: a.density,
        max_rounds: a.max_rounds,
        timing: a.timing,
    };
    let outcome = sweep::run_sweep(&cfg)?;
    let csv = sweep::to_csv(&cfg, &outcome);
    match &a.out {
        Some(path) => std::fs::write(path, csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    match outcome.fit {
        Some(f) => writeln!(err, "log-log slope {:.4} over {} points", f.slope, f.points)?,
        None => writeln!(err, "log-log slope undefined")?,
    }
    Ok(EXIT_OK)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<u8> {
    let g = hosts::generate(a.kind)?;
    match &a.out {
        Some(path) => write_edge_list(&g, path)?,
        None => out.write_all(format_edge_list(&g).as_bytes())?,
    }
    Ok(EXIT_OK)
}
