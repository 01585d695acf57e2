//! `frlab`: generators, labeling evaluators, product-sum solvers, supermagic
//! search, FR-code bounds, the DRESS simulator, and the reproduction suite
//! behind one binary. JSON goes to stdout, logs to stderr; exit codes are
//! 0 (ok), 2 (validation error), 3 (infeasible request).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use frlab::dress::{DressCode, PopularityModel};
use frlab::error::Error;
use frlab::frcode::{bound_recursive, bound_singleton, FileSizeMode, FrCode};
use frlab::labeling::{maxsum, minsum, popularity, variance, zipf_imbalance, zipf_popularity, BlockLabeling};
use frlab::magic::{check_supermagic, ivanco_predicate, k4r_bounds, k4r_labeling, supermagic_search_with_cap, EdgeLabeling, DEFAULT_MAGIC_CAP};
use frlab::minps::{exact_minps, local_search, weighted_turan_labeling, SolveResult};
use frlab::rational::render;
use frlab::setsystem::{Graph, SetSystem};

#[derive(Parser)]
#[command(name = "frlab", version, about = "Fractional repetition codes with access-balancing labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a built-in graph (or its 2-uniform set system)
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Evaluate a block labeling on a set system
    Eval {
        system: PathBuf,
        labeling: PathBuf,
        /// Also evaluate Zipf-weighted popularities with this exponent
        #[arg(long)]
        zipf: Option<f64>,
    },
    /// Minimum product-sum of a vertex labeling
    Minps {
        graph: PathBuf,
        /// Exact branch-and-bound (the default)
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        /// Search-node budget for exact solving beyond the size cap
        #[arg(long)]
        budget: Option<u64>,
        /// Run seeded local search over this many seeds instead
        #[arg(long)]
        heuristic: Option<u64>,
        /// Improving-swap budget per local-search seed
        #[arg(long, default_value_t = 1000)]
        max_iters: u64,
    },
    /// Closed-form optimal labelings
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Supermagic labeling operations
    Magic {
        #[command(subcommand)]
        kind: MagicKind,
    },
    /// Evaluate both upper bounds on the achievable file size
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        rho: usize,
    },
    /// M(k) of an FR code, exact or sampled
    Filesize {
        code: PathBuf,
        #[arg(long)]
        k: usize,
        /// Sample this many random k-subsets instead of exact enumeration
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Per-k optimality report of an FR code
    Report {
        code: PathBuf,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Replay a labeled access workload on a DRESS placement
    Sim {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long)]
        requests: u64,
        /// "linear" or "zipf:<beta>"
        #[arg(long, default_value = "linear")]
        model: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the built-in reproduction suite
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenOutput {
    /// Graph JSON
    Graph,
    /// 2-uniform set system JSON
    System,
    /// FR code JSON (nodes = vertices, symbols = edges)
    Code,
}

#[derive(Args)]
struct AsSystem {
    #[arg(long = "as", value_enum, default_value_t = GenOutput::Graph)]
    output: GenOutput,
}

#[derive(Subcommand)]
enum GenKind {
    Complete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: AsSystem,
    },
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: AsSystem,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: AsSystem,
    },
    /// Disjoint copies of a base graph file
    Mcopies {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: AsSystem,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Zipf exponent: emit the weighted variant instead
        #[arg(long)]
        beta: Option<f64>,
    },
    Mkr {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    Mtnr {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    Cycle {
        #[arg(long)]
        theta: usize,
    },
}

#[derive(Subcommand)]
enum MagicKind {
    /// Verify an edge labeling
    Check { graph: PathBuf, labeling: PathBuf },
    /// Search for a supermagic labeling
    Search {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        offset: u64,
    },
    /// Supermagic characterization of T(n, r)
    Ivanco {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Bounds (and for r <= 2 a labeling) for MinVar of K_{4r}
    K4r {
        #[arg(long)]
        r: u64,
        /// Skip the labeling construction
        #[arg(long)]
        bounds_only: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("frlab: {}", err);
            match err {
                AppError::Lib(Error::InvalidInput(_)) | AppError::Io(_) | AppError::Parse(_) => {
                    ExitCode::from(2)
                }
                AppError::Lib(Error::Infeasible(_))
                | AppError::Lib(Error::InsufficientSymbols { .. }) => ExitCode::from(3),
                AppError::SuiteFailed => ExitCode::from(1),
            }
        }
    }
}

enum AppError {
    Lib(Error),
    Io(String),
    Parse(String),
    SuiteFailed,
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Lib(e) => write!(f, "{}", e),
            AppError::Io(e) | AppError::Parse(e) => write!(f, "{}", e),
            AppError::SuiteFailed => write!(f, "verification suite failed"),
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Lib(e)
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Io(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| AppError::Parse(format!("{}: {}", path.display(), e)))
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), AppError> {
    let text = serde_json::to_string(value).map_err(|e| AppError::Parse(e.to_string()))?;
    println!("{}", text);
    Ok(())
}

fn env_cap_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Gen { kind } => {
            let (graph, out) = match kind {
                GenKind::Complete { n, out } => (Graph::complete(n), out),
                GenKind::Turan { n, r, out } => (Graph::turan(n, r)?, out),
                GenKind::Cycle { n, out } => (Graph::cycle(n)?, out),
                GenKind::Mcopies { base, m, out } => {
                    let base: Graph = read_json(&base)?;
                    (Graph::m_copies(&base, m)?, out)
                }
            };
            match out.output {
                GenOutput::Graph => emit(&graph),
                GenOutput::System => emit(&SetSystem::from_graph(&graph)?),
                GenOutput::Code => {
                    emit(&FrCode::from_set_system(&SetSystem::from_graph(&graph)?)?)
                }
            }
        }
        Command::Eval {
            system,
            labeling,
            zipf,
        } => {
            let system: SetSystem = read_json(&system)?;
            let sigma: BlockLabeling = read_json(&labeling)?;
            let p = popularity(&system, &sigma)?;
            let var = variance(&system, &sigma)?;
            let mut doc = json!({
                "popularity": p,
                "variance": render(&var),
                "minsum": minsum(&system, &sigma)?,
                "maxsum": maxsum(&system, &sigma)?,
            });
            if let Some(beta) = zipf {
                doc["zipf_popularity"] = json!(zipf_popularity(&system, &sigma, beta)?);
                doc["zipf_imbalance"] = json!(zipf_imbalance(&system, &sigma, beta)?);
            }
            emit(&doc)
        }
        Command::Minps {
            graph,
            exact: _,
            budget,
            heuristic,
            max_iters,
        } => {
            let graph: Graph = read_json(&graph)?;
            let result = match heuristic {
                Some(seeds) => {
                    let mut best: Option<SolveResult> = None;
                    for seed in 0..seeds.max(1) {
                        let candidate = local_search(&graph, seed, max_iters)?;
                        let better = match &best {
                            None => true,
                            Some(b) => {
                                candidate.value < b.value
                                    || (candidate.value == b.value
                                        && candidate.labeling.labels() < b.labeling.labels())
                            }
                        };
                        if better {
                            best = Some(candidate);
                        }
                    }
                    best.unwrap()
                }
                None => exact_minps(&graph, budget)?,
            };
            emit(&result)
        }
        Command::Construct { kind } => match kind {
            ConstructKind::Turan { n, r, beta: Some(beta) } => {
                emit(&weighted_turan_labeling(n, r, beta)?)
            }
            ConstructKind::Turan { n, r, beta: None } => emit(&frlab::minps::turan_labeling(n, r)?),
            ConstructKind::Mkr { m, r } => emit(&frlab::minps::mkr_labeling(m, r)?),
            ConstructKind::Mtnr { m, n, r } => emit(&frlab::minps::mtnr_labeling(m, n, r)?),
            ConstructKind::Cycle { theta } => emit(&frlab::minps::cycle_labeling(theta)?),
        },
        Command::Magic { kind } => match kind {
            MagicKind::Check { graph, labeling } => {
                let graph: Graph = read_json(&graph)?;
                let sigma: EdgeLabeling = read_json(&labeling)?;
                emit(&check_supermagic(&graph, &sigma)?)
            }
            MagicKind::Search { graph, offset } => {
                let graph: Graph = read_json(&graph)?;
                let cap = env_cap_u64("FRLAB_MAGIC_CAP")
                    .map(|c| c as usize)
                    .unwrap_or(DEFAULT_MAGIC_CAP);
                match supermagic_search_with_cap(&graph, offset, cap)? {
                    Some(sigma) => {
                        let verdict = check_supermagic(&graph, &sigma)?;
                        emit(&json!({
                            "found": true,
                            "labels": sigma.labels(),
                            "lambda": verdict.index,
                        }))
                    }
                    None => emit(&json!({ "found": false })),
                }
            }
            MagicKind::Ivanco { n, r } => {
                emit(&json!({ "supermagic": ivanco_predicate(n, r)? }))
            }
            MagicKind::K4r { r, bounds_only } => {
                let bounds = k4r_bounds(r)?;
                if bounds_only {
                    emit(&bounds)
                } else {
                    let result = k4r_labeling(r)?;
                    emit(&json!({
                        "bounds": bounds,
                        "labels": result.labeling.labels(),
                        "variance": render(&result.variance),
                    }))
                }
            }
        },
        Command::Bound { n, k, alpha, rho } => emit(&json!({
            "n": n, "k": k, "alpha": alpha, "rho": rho,
            "singleton": bound_singleton(n, k, alpha, rho)?,
            "recursive": bound_recursive(n, k, alpha, rho)?,
        })),
        Command::Filesize {
            code,
            k,
            sample,
            seed,
        } => {
            let code: FrCode = read_json(&code)?;
            let mode = match sample {
                Some(trials) => FileSizeMode::Sampled { trials, seed },
                None => FileSizeMode::Exact {
                    cap: env_cap_u64("FRLAB_SUBSET_CAP"),
                },
            };
            let result = code.file_size(k, mode)?;
            emit(&json!({ "k": k, "value": result.value, "exact": result.exact }))
        }
        Command::Report { code, kmax, format } => {
            let code: FrCode = read_json(&code)?;
            let report = code.optimality_report(kmax, env_cap_u64("FRLAB_SUBSET_CAP"))?;
            match format {
                Format::Csv => {
                    print!("{}", report.to_csv());
                    Ok(())
                }
                Format::Json => emit(&report),
            }
        }
        Command::Sim {
            code,
            labeling,
            requests,
            model,
            seed,
        } => {
            let fr: FrCode = read_json(&code)?;
            let sigma: BlockLabeling = read_json(&labeling)?;
            let model = parse_model(&model)?;
            let theta = fr.theta();
            let dress = DressCode::new(fr, theta, None)?;
            emit(&dress.workload_sim(&sigma, requests, model, seed)?)
        }
        Command::Verify { suite } => {
            if suite != "paper" {
                return Err(AppError::Lib(Error::InvalidInput(format!(
                    "unknown suite '{}'; only 'paper' exists",
                    suite
                ))));
            }
            let outcomes = frlab::verify::run_all();
            eprintln!("id   criterion                                     status");
            for outcome in &outcomes {
                eprintln!(
                    "{:<4} {:<45} {}  {}",
                    outcome.id,
                    outcome.name,
                    if outcome.passed { "PASS" } else { "FAIL" },
                    outcome.detail
                );
            }
            emit(&outcomes)?;
            if outcomes.iter().all(|o| o.passed) {
                Ok(())
            } else {
                Err(AppError::SuiteFailed)
            }
        }
    }
}

fn parse_model(text: &str) -> Result<PopularityModel, AppError> {
    if text == "linear" {
        return Ok(PopularityModel::Linear);
    }
    if let Some(beta) = text.strip_prefix("zipf:") {
        let beta: f64 = beta
            .parse()
            .map_err(|_| AppError::Lib(Error::InvalidInput(format!("bad zipf exponent '{}'", beta))))?;
        return Ok(PopularityModel::Zipf(beta));
    }
    Err(AppError::Lib(Error::InvalidInput(format!(
        "unknown model '{}'; use linear or zipf:<beta>",
        text
    ))))
}
