//! Command-line front end for `hcolor`.
//!
//! [`RunConfig`] is the parsed command line and [`run`] executes it, writing
//! data to the given writer and returning the process exit code. Diagnostics
//! go to standard error.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hcolor::generate::{
    cubic_graphs, scan_jaeger, scan_sylvester, verify_prop1, verify_prop2, verify_thm1,
    verify_thm2, GenFilter, Strategy, Verdict, VerificationReport, VerifyConfig, DEFAULT_MAX_N,
};
use hcolor::graph::{canonical_form, k33, k4, petersen, sylvester, triple_edge, Multigraph};
use hcolor::hcoloring::{derive_52_cover, derive_bf_cover, solve, SolveOptions, SolveStatus};
use hcolor::io::{parse_coloring, parse_graph_file, write_coloring, write_edge_list};
use hcolor::matchings::{is_even_cover, is_perfect_matching_cover};

/// Statement verified or object found.
pub const EXIT_OK: i32 = 0;
/// Statement refuted or object proven not to exist.
pub const EXIT_REFUTED: i32 = 1;
/// Node limit reached before a decision.
pub const EXIT_INCONCLUSIVE: i32 = 2;
/// Bad arguments, unreadable input, or an internal error.
pub const EXIT_USAGE: i32 = 3;

/// A graph named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSelector {
    Petersen,
    Sylvester,
    K4,
    K33,
    Triple,
    File(PathBuf),
}

impl FromStr for GraphSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "petersen" => GraphSelector::Petersen,
            "sylvester" => GraphSelector::Sylvester,
            "k4" => GraphSelector::K4,
            "k33" => GraphSelector::K33,
            "triple" => GraphSelector::Triple,
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => GraphSelector::File(path.into()),
                _ => {
                    return Err(format!(
                        "unknown graph {s:?}; expected petersen, sylvester, k4, k33, triple \
                         or file:<path>"
                    ))
                }
            },
        })
    }
}

impl fmt::Display for GraphSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSelector::Petersen => f.write_str("petersen"),
            GraphSelector::Sylvester => f.write_str("sylvester"),
            GraphSelector::K4 => f.write_str("k4"),
            GraphSelector::K33 => f.write_str("k33"),
            GraphSelector::Triple => f.write_str("triple"),
            GraphSelector::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl GraphSelector {
    /// Builds the graph. Files must describe cubic graphs.
    pub fn load(&self) -> Result<Multigraph> {
        Ok(match self {
            GraphSelector::Petersen => petersen(),
            GraphSelector::Sylvester => sylvester(),
            GraphSelector::K4 => k4(),
            GraphSelector::K33 => k33(),
            GraphSelector::Triple => triple_edge(),
            GraphSelector::File(path) => parse_graph_file(path, true)?,
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "hcolor", version, about = "H-colorings of cubic multigraphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for an H-coloring of G and print it as a coloring file.
    Solve(SolveArgs),
    /// Validate a coloring file.
    Check {
        g: GraphSelector,
        h: GraphSelector,
        coloring: PathBuf,
    },
    /// Print every cubic multigraph up to an order, one per isomorphism class.
    Gen(GenArgs),
    /// Exhaustively verify a statement on small graphs and print a JSON report.
    Verify {
        statement: Statement,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Search for counterexamples to a conjecture and print a JSON report.
    Scan {
        conjecture: Conjecture,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Derive a cover by six perfect matchings and a (5,2) even cover of G
    /// from a Petersen coloring, found or supplied.
    Covers {
        g: GraphSelector,
        /// Coloring file of G by the Petersen graph; searched for when absent.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = SolveOptions::default().node_limit)]
        node_limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Source graph G.
    #[arg(long = "g")]
    pub g: GraphSelector,
    /// Color graph H.
    #[arg(long = "h")]
    pub h: GraphSelector,
    /// Enumerate all colorings instead of stopping at the first.
    #[arg(long)]
    pub enumerate_all: bool,
    #[arg(long)]
    pub max_solutions: Option<usize>,
    #[arg(long)]
    pub symmetry_break: bool,
    #[arg(long, default_value_t = SolveOptions::default().node_limit)]
    pub node_limit: u64,
    /// Write the first coloring here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// With --enumerate-all, write every coloring into this directory.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub bridgeless: bool,
    #[arg(long)]
    pub simple_only: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Vertex)]
    pub strategy: StrategyArg,
    /// Print only the number of classes per order.
    #[arg(long)]
    pub count: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[arg(long, default_value_t = SolveOptions::default().node_limit)]
    pub node_limit: u64,
    #[arg(long)]
    pub symmetry_break: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Vertex)]
    pub strategy: StrategyArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory receiving counterexample graphs.
    #[arg(long, default_value = "runs")]
    pub run_dir: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Statement {
    Prop1,
    Prop2,
    Thm1,
    Thm2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Conjecture {
    Jaeger,
    Sylvester,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Edge,
    Vertex,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Edge => Strategy::EdgeInsertion,
            StrategyArg::Vertex => Strategy::VertexInsertion,
        }
    }
}

/// Executes `config`, writing data to `out`. Returns the exit code; errors
/// map to [`EXIT_USAGE`].
pub fn run(config: RunConfig, out: &mut dyn Write) -> Result<i32> {
    match config.command {
        Command::Solve(args) => run_solve(args, out),
        Command::Check { g, h, coloring } => run_check(&g, &h, &coloring, out),
        Command::Gen(args) => run_gen(args, out),
        Command::Verify { statement, run } => {
            let task = match statement {
                Statement::Prop1 => verify_prop1,
                Statement::Prop2 => verify_prop2,
                Statement::Thm1 => verify_thm1,
                Statement::Thm2 => verify_thm2,
            };
            run_report(task, run, out)
        }
        Command::Scan { conjecture, run } => {
            let task = match conjecture {
                Conjecture::Jaeger => scan_jaeger,
                Conjecture::Sylvester => scan_sylvester,
            };
            run_report(task, run, out)
        }
        Command::Covers {
            g,
            coloring,
            node_limit,
            out: path,
        } => run_covers(&g, coloring.as_ref(), node_limit, path, out),
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(text.as_bytes()).context("writing output"),
    }
}

fn status_code(status: SolveStatus) -> i32 {
    match status {
        SolveStatus::Found => EXIT_OK,
        SolveStatus::ExhaustedNone => EXIT_REFUTED,
        SolveStatus::NodeLimit => EXIT_INCONCLUSIVE,
    }
}

fn run_solve(args: SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, h) = (args.g.load()?, args.h.load()?);
    let opts = SolveOptions {
        enumerate_all: args.enumerate_all,
        max_solutions: args.max_solutions.unwrap_or(usize::MAX),
        symmetry_break: args.symmetry_break,
        node_limit: args.node_limit,
    };
    if opts.max_solutions == 0 {
        bail!("--max-solutions must be positive");
    }
    let outcome = solve(&g, &h, &opts)?;
    eprintln!(
        "status: {:?}; colorings: {}; nodes: {}",
        outcome.status,
        outcome.witnesses.len(),
        outcome.stats.nodes
    );
    if let Some(first) = outcome.witnesses.first() {
        emit(&write_coloring(first), args.out.as_ref(), out)?;
    }
    if let Some(dir) = &args.out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, f) in outcome.witnesses.iter().enumerate() {
            let path = dir.join(format!("coloring-{i}.txt"));
            std::fs::write(&path, write_coloring(f))
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(status_code(outcome.status))
}

fn run_check(
    g: &GraphSelector,
    h: &GraphSelector,
    path: &PathBuf,
    out: &mut dyn Write,
) -> Result<i32> {
    let (g, h) = (g.load()?, h.load()?);
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let f = parse_coloring(&text, &g, &h)?;
    Ok(match f.check() {
        Ok(()) => {
            writeln!(out, "valid")?;
            EXIT_OK
        }
        Err(v) => {
            writeln!(out, "invalid: {v}")?;
            EXIT_REFUTED
        }
    })
}

fn run_gen(args: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let filter = GenFilter {
        max_n: args.max_n,
        connected: args.connected,
        bridgeless: args.bridgeless,
        simple_only: args.simple_only,
    };
    filter.validate()?;
    let mut text = String::new();
    let mut index = 0;
    for n in (2..=args.max_n).step_by(2) {
        let graphs = cubic_graphs(n, &filter, args.strategy.into())?;
        if args.count {
            text.push_str(&format!("{n} {}\n", graphs.len()));
            continue;
        }
        for g in graphs {
            index += 1;
            let form = canonical_form(&g)?.to_hex();
            text.push_str(&format!("# graph {index} canonical {form}\n"));
            text.push_str(&write_edge_list(&g));
            text.push('\n');
        }
    }
    emit(&text, args.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn run_report(
    task: fn(&VerifyConfig) -> Result<VerificationReport, hcolor::graph::GraphError>,
    args: RunArgs,
    out: &mut dyn Write,
) -> Result<i32> {
    let config = VerifyConfig {
        max_n: args.max_n,
        workers: args.workers,
        node_limit: args.node_limit,
        symmetry_break: args.symmetry_break,
        strategy: args.strategy.into(),
        run_dir: Some(args.run_dir),
    };
    if config.node_limit == 0 {
        bail!("--node-limit must be positive");
    }
    let report = task(&config)?;
    emit(&report.to_json(), args.out.as_ref(), out)?;
    eprintln!(
        "{}: {:?}; {} graphs, {} hits, {} counterexamples, {} inconclusive",
        report.task,
        report.verdict,
        report.stats.graphs_examined,
        report.stats.hits,
        report.counterexamples.len(),
        report.stats.inconclusive
    );
    Ok(match report.verdict {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_REFUTED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

#[derive(Debug, Serialize)]
struct DerivedCover {
    members: Vec<Vec<u32>>,
    valid: bool,
}

#[derive(Debug, Serialize)]
struct CoversReport {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    coloring: Vec<u32>,
    perfect_matching_cover: DerivedCover,
    even_cover: DerivedCover,
}

fn run_covers(
    g: &GraphSelector,
    coloring: Option<&PathBuf>,
    node_limit: u64,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = g.load()?;
    let p = petersen();
    let f = match coloring {
        Some(file) => {
            let text = std::fs::read_to_string(file)
                .with_context(|| format!("reading {}", file.display()))?;
            parse_coloring(&text, &g, &p)?
        }
        None => {
            let outcome = solve(
                &g,
                &p,
                &SolveOptions {
                    node_limit,
                    ..SolveOptions::default()
                },
            )?;
            if outcome.status != SolveStatus::Found {
                eprintln!(
                    "status: {:?}; no Petersen coloring to derive covers from",
                    outcome.status
                );
                return Ok(status_code(outcome.status));
            }
            outcome.witnesses.into_iter().next().expect("found")
        }
    };
    let bf = derive_bf_cover(&f)?;
    let even = derive_52_cover(&f)?;
    let members = |c: &[hcolor::graph::EdgeSubset]| -> Vec<Vec<u32>> {
        c.iter().map(|s| s.iter().map(|e| e.0).collect()).collect()
    };
    let report = CoversReport {
        n: g.n(),
        m: g.m(),
        edges: g.edge_list().collect(),
        coloring: f.map().iter().map(|e| e.0).collect(),
        perfect_matching_cover: DerivedCover {
            members: members(&bf),
            valid: bf.len() == 6 && is_perfect_matching_cover(&g, &bf, 2),
        },
        even_cover: DerivedCover {
            members: members(&even),
            valid: even.len() == 5 && is_even_cover(&g, &even, 2),
        },
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    emit(&text, path.as_ref(), out)?;
    let ok = report.perfect_matching_cover.valid && report.even_cover.valid;
    Ok(if ok { EXIT_OK } else { EXIT_REFUTED })
}
