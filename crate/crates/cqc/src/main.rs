use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cqc_core::oracle::{enumerate_all_limited, DEFAULT_LIMIT};
use cqc_core::synth::{generate, SynthConfig};
use cqc_core::{Layer, LayerPair, MiningParams, Pattern, Pruning, Rational, Stats, VertexId};
use serde::Serialize;

use cqc::output::{pattern_lines, report_csv, RunSummary};
use cqc::{edgelist, parse_rational, run_baseline, run_mine, Error};

#[derive(Parser)]
#[command(
    name = "cqc",
    version,
    about = "Contrasting quasi-clique mining on two-layer graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Best-first search for contrasting quasi-cliques.
    Mine(MineArgs),
    /// Dense cross-graph mining against each layer's complement, re-scored.
    Baseline(MineArgs),
    /// Exhaustive enumeration for small graphs.
    Oracle(OracleArgs),
    /// Synthetic power-law pair with embedded dense blocks.
    Gen(GenArgs),
    /// Summary table over stats files.
    #[command(alias = "stats")]
    Report(ReportArgs),
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    graph1: PathBuf,
    #[arg(long)]
    graph2: PathBuf,
    #[arg(long, default_value = "0.5", value_parser = parse_rational)]
    delta: Rational,
    #[arg(long, default_value = "0", value_parser = parse_rational)]
    delta_prime: Rational,
    #[arg(long, default_value = "0.1", value_parser = parse_rational)]
    r: Rational,
    #[arg(long, default_value_t = 4)]
    min_size: usize,
    /// Minimum γ in the denser layer for a set to score at all.
    #[arg(long, default_value = "0.5", value_parser = parse_rational)]
    base_gamma: Rational,
    /// Pattern output (JSON lines); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run statistics (JSON).
    #[arg(long)]
    stats: Option<PathBuf>,
}

impl Input {
    fn params(&self) -> Result<MiningParams, Error> {
        let params = MiningParams {
            delta: self.delta,
            delta_prime: self.delta_prime,
            r: self.r,
            min_size: self.min_size,
            base_gamma: self.base_gamma,
        };
        params.validate()?;
        Ok(params)
    }

    fn load(&self) -> Result<LayerPair, Error> {
        edgelist::read_pair(&self.graph1, &self.graph2)
    }
}

#[derive(Args)]
struct MineArgs {
    #[command(flatten)]
    input: Input,
    /// Turn off bound pruning and the full candidate filter.
    #[arg(long)]
    no_prune: bool,
    /// Distance-two locality rule (on by default).
    #[arg(long, overrides_with = "no_diameter_prune")]
    diameter_prune: bool,
    #[arg(long)]
    no_diameter_prune: bool,
    /// Accepted for symmetry with `gen`; mining is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

impl MineArgs {
    fn pruning(&self) -> Pruning {
        let mut p = if self.no_prune {
            Pruning::disabled()
        } else {
            Pruning::default()
        };
        p.diameter = !self.no_diameter_prune;
        p
    }
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: Input,
    /// Print every valid pattern instead of the greedy result.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Edges per layer before embedding; scaled from `n` when absent.
    #[arg(long)]
    edges: Option<usize>,
    /// Blocks per layer; one per 50 vertices when absent.
    #[arg(long)]
    embedded: Option<usize>,
    #[arg(long, default_value_t = 10)]
    qc_size: usize,
    #[arg(long, default_value = "0.6", value_parser = parse_rational)]
    qc_density: Rational,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    graph1: PathBuf,
    #[arg(long)]
    graph2: PathBuf,
    /// Ground truth (JSON).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ReportArgs {
    /// Stats files; each becomes a column named after the file stem.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Truth {
    layer1: Vec<Vec<String>>,
    layer2: Vec<Vec<String>>,
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(
    input: &Input,
    graph: &LayerPair,
    patterns: &[Pattern],
    summary: &RunSummary,
) -> Result<(), Error> {
    write(input.out.as_deref(), &pattern_lines(graph, patterns))?;
    if let Some(path) = &input.stats {
        let json = serde_json::to_string_pretty(summary).expect("plain data");
        write(Some(path), &(json + "\n"))?;
    }
    Ok(())
}

fn mine(args: &MineArgs) -> Result<(), Error> {
    let params = args.input.params()?;
    let graph = args.input.load()?;
    let run = run_mine(&graph, &params, args.pruning());
    let patterns = run.value.result.patterns();
    let summary = RunSummary::new(&run.value.stats, patterns, run.wall);
    finish(&args.input, &graph, patterns, &summary)
}

fn baseline(args: &MineArgs) -> Result<(), Error> {
    let params = args.input.params()?;
    let graph = args.input.load()?;
    let run = run_baseline(&graph, &params, args.pruning());
    let patterns = run.value.result.patterns();
    let summary = RunSummary::new(&run.value.stats, patterns, run.wall);
    finish(&args.input, &graph, patterns, &summary)
}

fn oracle(args: &OracleArgs) -> Result<(), Error> {
    let params = args.input.params()?;
    let graph = args.input.load()?;
    let start = Instant::now();
    let out = enumerate_all_limited(&graph, &params, args.limit)?;
    let wall = start.elapsed();
    let stats = Stats {
        nodes_visited: 1u64 << graph.vertex_count(),
        patterns_emitted: out.all_cqcs.len() as u64,
        patterns_accepted: out.greedy_result.len() as u64,
        ..Stats::default()
    };
    let patterns = if args.all {
        &out.all_cqcs[..]
    } else {
        out.greedy_result.patterns()
    };
    let summary = RunSummary::new(&stats, out.greedy_result.patterns(), wall);
    finish(&args.input, &graph, patterns, &summary)
}

fn gen(args: &GenArgs) -> Result<(), Error> {
    let mut config = SynthConfig::benchmark_scale(args.n, args.seed);
    if let Some(e) = args.edges {
        config.target_edges = e;
    }
    if let Some(k) = args.embedded {
        config.n_embedded = k;
    }
    config.qc_size = args.qc_size;
    config.qc_density = args.qc_density;
    let (graph, truth) = generate(&config)?;
    edgelist::write_layer(&graph, Layer::First, &args.graph1)?;
    edgelist::write_layer(&graph, Layer::Second, &args.graph2)?;
    let labels = |blocks: &Vec<Vec<VertexId>>| -> Vec<Vec<String>> {
        blocks
            .iter()
            .map(|b| b.iter().map(|&v| graph.label(v).to_owned()).collect())
            .collect()
    };
    let truth = Truth {
        layer1: labels(&truth.embedded[0]),
        layer2: labels(&truth.embedded[1]),
    };
    let json = serde_json::to_string(&truth).expect("plain data");
    write(Some(&args.out), &(json + "\n"))
}

fn report(args: &ReportArgs) -> Result<(), Error> {
    let mut runs = Vec::new();
    for path in &args.files {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        let summary: RunSummary = serde_json::from_str(&text).map_err(|source| Error::Stats {
            path: path.clone(),
            source,
        })?;
        let name = path.file_stem().map_or_else(
            || path.display().to_string(),
            |s| s.to_string_lossy().into_owned(),
        );
        runs.push((name, summary));
    }
    write(args.out.as_deref(), &report_csv(&runs))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Mine(a) => mine(a),
        Command::Baseline(a) => baseline(a),
        Command::Oracle(a) => oracle(a),
        Command::Gen(a) => gen(a),
        Command::Report(a) => report(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cqc: {e}");
            ExitCode::FAILURE
        }
    }
}
