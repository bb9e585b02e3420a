//! Command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 refusal (size cap), 4 output could not be written.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use crate::counter::{count_paths, CountConfig};
use crate::decompose::PartialBfs;
use crate::encoding::{encode_spse, EncodingParams, Preset, PresetValues};
use crate::error::Error;
use crate::generate::{self, Family};
use crate::graph::Graph;
use crate::io::{format_edge_list, read_graphs, GraphJson};
use crate::oracle::exact_path_counts_with;
use crate::sweep::{self, SweepParam};
use crate::synth::{generate_dataset, SynthParams};
use crate::tensor::PathCountTensor;
use crate::tensor_file::{read_tensor, write_sidecar, write_tensor, Sidecar, TensorData};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;
pub const EXIT_OUTPUT: i32 = 4;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "spse", version, about = "Simple-path structural encodings for graphs")]
struct Cli {
    /// Worker threads; defaults to available parallelism.
    #[arg(long, global = true, env = "SPSE_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count simple paths between all node pairs.
    Count(CountArgs),
    /// Map a count tensor to encoded values.
    Encode(EncodeArgs),
    /// Run a property suite and print a JSON report.
    Verify(VerifyArgs),
    /// Discovery ratio while varying one counting parameter.
    Sweep(SweepArgs),
    /// Generate graphs or the synthetic cycle-counting dataset.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Dataset preset (zinc, pattern, cluster, mnist, cifar10, peptides, pcqm4mv2) or JSON preset file.
    #[arg(long)]
    preset: Option<String>,
    /// Fraction of nodes used as roots.
    #[arg(short = 'R', long = "roots-frac")]
    roots_frac: Option<f64>,
    /// Maximum path length K.
    #[arg(short = 'K', long = "max-len")]
    max_len: Option<usize>,
    /// Maximum DFS depth.
    #[arg(long = "dfs-depth")]
    dfs_depth: Option<usize>,
    /// Trials per root and depth.
    #[arg(short = 'N', long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep every child in the partial BFS step (debugging aid).
    #[arg(long)]
    no_partial_bfs: bool,
}

impl ConfigArgs {
    fn config(&self) -> Result<CountConfig, Failure> {
        let mut cfg = match &self.preset {
            Some(p) => resolve_preset(p)?.split(self.seed).0,
            None => CountConfig {
                seed: self.seed,
                ..CountConfig::default()
            },
        };
        if let Some(r) = self.roots_frac {
            cfg.root_fraction = r;
        }
        if let Some(k) = self.max_len {
            cfg.k_max = k;
        }
        if let Some(d) = self.dfs_depth {
            cfg.dfs_depth = d;
        }
        if let Some(n) = self.trials {
            cfg.trials = n;
        }
        if self.no_partial_bfs {
            cfg.partial_bfs = PartialBfs::Disabled;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Edge list or JSON graph/dataset files.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    config: ConfigArgs,
    /// Exhaustive enumeration instead of DAG decomposition.
    #[arg(long)]
    exact: bool,
    /// Lift the node cap on exhaustive enumeration.
    #[arg(long)]
    allow_large: bool,
    /// Output file for a single graph, directory for several.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    /// Count tensor file.
    input: PathBuf,
    /// Dataset preset (zinc, pattern, cluster, mnist, cifar10, peptides, pcqm4mv2) or JSON preset file.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "logn"])]
    preset: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Number of nested ln(1 + x) applications.
    #[arg(long)]
    logn: Option<u32>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// One of 1, 2, 3, lower-bound, fig3, fig6.
    #[arg(long)]
    prop: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    cases: Option<usize>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Graph files; when absent, molecule-like graphs are generated.
    inputs: Vec<PathBuf>,
    /// Parameter to vary: R, N or D_dfs.
    #[arg(long)]
    param: String,
    /// Comma-separated values.
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<f64>,
    /// Reference configuration: preset name or JSON preset file.
    #[arg(long, default_value = "zinc")]
    canonical: String,
    /// Source of the parameters not being varied; defaults to the canonical.
    #[arg(long)]
    base: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Generated graph count.
    #[arg(long, default_value_t = 100)]
    graphs: usize,
    /// Generated graph size.
    #[arg(long, default_value_t = 23)]
    nodes: usize,
    /// Rings closed in each generated graph.
    #[arg(long, default_value_t = 3)]
    rings: usize,
    /// CSV destination; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Generate the synthetic cycle-counting dataset.
    #[arg(long, conflicts_with = "family")]
    synth: bool,
    /// Graph family: path, cycle, complete, star, er, tree, csl.
    #[arg(long)]
    family: Option<String>,
    /// Node count, or graph count with --synth.
    #[arg(long)]
    n: Option<usize>,
    /// Cycle length.
    #[arg(long)]
    m: Option<usize>,
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// Chord offset for skip-link graphs.
    #[arg(long)]
    skip: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write JSON instead of an edge list.
    #[arg(long)]
    json: bool,
    /// Output directory with --synth, file otherwise (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Refused { .. } => EXIT_REFUSED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn write_failure(path: &Path) -> impl FnOnce(Error) -> Failure + '_ {
    move |e| Failure {
        code: EXIT_OUTPUT,
        message: format!("cannot write {}: {e}", path.display()),
    }
}

fn read_failure(path: &Path) -> impl FnOnce(Error) -> Failure + '_ {
    move |e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

/// Preset by name, or a JSON preset file.
fn resolve_preset(spec: &str) -> Result<PresetValues, Failure> {
    if let Ok(p) = spec.parse::<Preset>() {
        return Ok(p.values());
    }
    let path = Path::new(spec);
    if path.exists() {
        return PresetValues::from_json_file(path).map_err(read_failure(path));
    }
    Err(spec.parse::<Preset>().unwrap_err().into())
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Parses `args` (program name first) and executes the command.
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
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return EXIT_INPUT;
        }
    };
    let result = pool.install(|| match cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Encode(a) => cmd_encode(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Gen(a) => cmd_gen(a),
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn cmd_count(a: CountArgs) -> Result<i32, Failure> {
    let cfg = a.config.config()?;
    let mut graphs: Vec<Graph> = Vec::new();
    for path in &a.inputs {
        graphs.extend(read_graphs(path).map_err(read_failure(path))?);
    }
    let targets: Vec<PathBuf> = if graphs.len() == 1 {
        vec![a.output.clone().unwrap_or_else(|| with_suffix(&a.inputs[0], ".spse"))]
    } else {
        let dir = a.output.clone().unwrap_or_else(|| with_suffix(&a.inputs[0], ".spse.d"));
        std::fs::create_dir_all(&dir).map_err(|e| write_failure(&dir)(e.into()))?;
        (0..graphs.len()).map(|i| dir.join(format!("graph_{i:05}.spse"))).collect()
    };

    let results = graphs
        .par_iter()
        .map(|g| -> Result<(PathCountTensor, Sidecar), Error> {
            if a.exact {
                let start = Instant::now();
                let tensor = exact_path_counts_with(g, cfg.k_max, a.allow_large)?;
                let meta = Sidecar {
                    config: json!({ "mode": "exact", "K": cfg.k_max }),
                    seed: cfg.seed,
                    saturated: tensor.saturated(),
                    wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
                    tool_version: VERSION.to_string(),
                    dag_count: None,
                };
                Ok((tensor, meta))
            } else {
                let report = count_paths(g, &cfg)?;
                let mut config = serde_json::to_value(&cfg)?;
                config["mode"] = json!("approximate");
                let meta = Sidecar {
                    config,
                    seed: cfg.seed,
                    saturated: report.saturated,
                    wall_time_ms: report.wall_time.as_secs_f64() * 1e3,
                    tool_version: VERSION.to_string(),
                    dag_count: Some(report.dag_count),
                };
                Ok((report.tensor, meta))
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;

    for ((tensor, meta), path) in results.into_iter().zip(&targets) {
        write_tensor(path, &TensorData::Counts(tensor.into_counts())).map_err(write_failure(path))?;
        write_sidecar(path, &meta).map_err(write_failure(path))?;
        eprintln!("wrote {}", path.display());
    }
    Ok(EXIT_OK)
}

fn cmd_encode(a: EncodeArgs) -> Result<i32, Failure> {
    let params = match &a.preset {
        Some(p) => resolve_preset(p)?.split(0).1,
        None => {
            let (Some(alpha), Some(beta), Some(logn)) = (a.alpha, a.beta, a.logn) else {
                return Err(Error::input("give --preset or all of --alpha, --beta, --logn").into());
            };
            EncodingParams::new(alpha, beta, logn)?
        }
    };
    let start = Instant::now();
    let counts = read_tensor(&a.input)
        .and_then(TensorData::into_counts)
        .map_err(read_failure(&a.input))?;
    let encoded = encode_spse(&counts, &params);
    let out = a.output.unwrap_or_else(|| with_suffix(&a.input, ".enc"));
    write_tensor(&out, &TensorData::Reals(encoded)).map_err(write_failure(&out))?;
    let meta = Sidecar {
        config: serde_json::to_value(params).map_err(Error::from)?,
        seed: 0,
        saturated: counts.saturated(),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        tool_version: VERSION.to_string(),
        dag_count: None,
    };
    write_sidecar(&out, &meta).map_err(write_failure(&out))?;
    eprintln!("wrote {}", out.display());
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs) -> Result<i32, Failure> {
    let suite: Suite = a.prop.parse()?;
    let report = run_suite(suite, a.seed, a.cases)?;
    println!("{}", serde_json::to_string_pretty(&report).map_err(Error::from)?);
    Ok(if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_sweep(a: SweepArgs) -> Result<i32, Failure> {
    let param: SweepParam = a.param.parse()?;
    let canonical = resolve_preset(&a.canonical)?.split(a.seed).0;
    let base = match &a.base {
        Some(b) => resolve_preset(b)?.split(a.seed).0,
        None => canonical.clone(),
    };
    let graphs: Vec<Graph> = if a.inputs.is_empty() {
        (0..a.graphs)
            .map(|i| generate::molecule_like(a.nodes, a.rings, crate::rng::derive_seed(a.seed, &[i as u64])))
            .collect::<Result<_, _>>()?
    } else {
        let mut gs = Vec::new();
        for path in &a.inputs {
            gs.extend(read_graphs(path).map_err(read_failure(path))?);
        }
        gs
    };
    let rows = sweep::sweep(&graphs, &base, &canonical, param, &a.values)?;
    let csv = sweep::to_csv(param, &rows);
    match &a.output {
        Some(path) => std::fs::write(path, csv).map_err(|e| write_failure(path)(e.into()))?,
        None => print!("{csv}"),
    }
    Ok(EXIT_OK)
}

fn cmd_gen(a: GenArgs) -> Result<i32, Failure> {
    if a.synth {
        let n = a.n.unwrap_or(12_000);
        let params = SynthParams::with_graphs(n, a.seed);
        let dataset = generate_dataset(&params)?;
        let dir = a.output.clone().unwrap_or_else(|| PathBuf::from("synth"));
        dataset.write_dir(&dir).map_err(write_failure(&dir))?;
        let m = dataset.manifest();
        eprintln!(
            "wrote {} graphs to {} (mean nodes {:.1}, mean edges {:.1})",
            n,
            dir.display(),
            m.mean_nodes,
            m.mean_edges
        );
        return Ok(EXIT_OK);
    }
    let Some(name) = &a.family else {
        return Err(Error::input("give --synth or --family").into());
    };
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::input(format!("--family {name} needs --{flag}")));
    let family = match name.as_str() {
        "path" => Family::Path { n: need(a.n, "n")? },
        "cycle" => Family::Cycle {
            m: need(a.m.or(a.n), "m")?,
        },
        "complete" => Family::Complete { n: need(a.n, "n")? },
        "star" => Family::Star { n: need(a.n, "n")? },
        "tree" => Family::Tree { n: need(a.n, "n")? },
        "er" => Family::Er {
            n: need(a.n, "n")?,
            p: a.p.ok_or_else(|| Error::input("--family er needs --p"))?,
        },
        "csl" => Family::Csl {
            n: need(a.n, "n")?,
            skip: need(a.skip, "skip")?,
        },
        other => {
            return Err(Error::input(format!(
                "unknown family '{other}'; use path, cycle, complete, star, er, tree or csl"
            ))
            .into())
        }
    };
    let g = generate::generate(&family, a.seed)?;
    let text = if a.json {
        serde_json::to_string(&GraphJson::from(&g)).map_err(Error::from)? + "\n"
    } else {
        format_edge_list(&g)
    };
    match &a.output {
        Some(path) => std::fs::write(path, text).map_err(|e| write_failure(path)(e.into()))?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}
