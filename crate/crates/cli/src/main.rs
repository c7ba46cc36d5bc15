use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rainbow_cli::family::build_family;
use rainbow_cli::io::{emit_colouring, emit_graph, emit_triples, parse_graph};
use rainbow_cli::{read_file, run_experiment, CliError, ColouringSource, ExperimentConfig, GraphSource, Params, Report};

/// Rainbow induced paths in coloured graphs: searches, proof constructions
/// and exhaustive colouring checks. Reports are JSON on stdout (or --json);
/// human-readable notes go to stderr.
#[derive(Parser)]
#[command(name = "rainbow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph as an edge list, optionally with a colouring and triple labels.
    Gen {
        #[command(flatten)]
        common: Common,
        /// Edge list destination (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Colouring destination, used with --colouring.
        #[arg(long)]
        colouring_out: Option<PathBuf>,
        /// Triple sidecar destination for shift:N families.
        #[arg(long)]
        triples: Option<PathBuf>,
    },
    /// Chromatic number, clique number and girth.
    Analyze {
        #[command(flatten)]
        common: Common,
    },
    /// rainbow-path | induced-path | rainbow-hole | hole-run | hole-all-runs | holes
    Search {
        op: String,
        #[command(flatten)]
        common: Common,
    },
    /// orient | grs | a-set | b-set | candidates | grading-search | grading-constructive | guided | constants
    Machinery {
        op: String,
        #[command(flatten)]
        common: Common,
    },
    /// max-degree | monotone | shift-claims | aravind
    Verify {
        claim: String,
        #[command(flatten)]
        common: Common,
    },
    /// aravind (all colourings, checkpointed) | stable-cover
    Hunt {
        #[arg(default_value = "aravind")]
        op: String,
        #[command(flatten)]
        common: Common,
    },
    /// Named experiment: mycielski-23-invariants, mycielski-23-t5, grotzsch-t4, shift-deg2, shift-claims
    Run {
        name: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Edge-list file.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Generator spec such as cycle:5, shift:7, mycielski:2, random-tf:20.
    #[arg(long)]
    family: Option<String>,
    /// FILE | middle | random | optimal | enumerate
    #[arg(long)]
    colouring: Option<String>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Ground set size for shift-graph claims.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    z: Option<usize>,
    /// Path as comma-separated vertices.
    #[arg(long, value_delimiter = ',')]
    q: Option<Vec<usize>>,
    /// Grading blocks: `0,1;2,3;4`.
    #[arg(long)]
    blocks: Option<String>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    kappa: Option<u64>,
    #[arg(long)]
    c_prime: Option<u64>,
    /// Dichotomy thresholds beyond r(1)=1, r(2)=2, e.g. `3=5,4=9`.
    #[arg(long)]
    r_table: Option<String>,
    /// Palette size for random colourings.
    #[arg(long)]
    palette: Option<u32>,
    /// Search-node budget.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    split_depth: Option<usize>,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Stable cover file: one set of vertices per line.
    #[arg(long)]
    cover: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn parse_blocks(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    text.split(';')
        .map(|b| {
            b.split(',')
                .map(str::trim)
                .filter(|v| !v.is_empty())
                .map(|v| v.parse().map_err(|_| CliError::Input(format!("bad vertex `{v}` in --blocks"))))
                .collect()
        })
        .collect()
}

fn config(name: String, c: &Common) -> Result<ExperimentConfig, CliError> {
    let graph = match (&c.graph, &c.family) {
        (Some(p), _) => Some(GraphSource::File(p.clone())),
        (None, Some(f)) => Some(GraphSource::Family(f.clone())),
        (None, None) => None,
    };
    let colouring = c.colouring.as_deref().map(str::parse::<ColouringSource>).transpose()?;
    Ok(ExperimentConfig {
        experiment: name,
        graph,
        colouring,
        params: Params {
            s: c.s,
            t: c.t,
            d: c.d,
            n: c.n,
            z: c.z,
            q: c.q.clone(),
            blocks: c.blocks.as_deref().map(parse_blocks).transpose()?,
            r: c.r,
            kappa: c.kappa,
            c_prime: c.c_prime,
            r_table: c.r_table.clone(),
            palette: c.palette,
            budget: c.budget,
            seed: c.seed,
            jobs: c.jobs,
            split_depth: c.split_depth,
            checkpoint: c.checkpoint.clone(),
            cover: c.cover.clone(),
        },
    })
}

fn write(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })
}

/// Writes the files requested by `gen`.
fn generate(cfg: &ExperimentConfig, out: Option<&PathBuf>, colouring_out: Option<&PathBuf>, triples: Option<&PathBuf>) -> Result<(), CliError> {
    let (graph, labels) = match &cfg.graph {
        Some(GraphSource::Family(spec)) => {
            let f = build_family(spec, cfg.params.seed)?;
            (f.graph, f.triples)
        }
        Some(GraphSource::File(p)) => (parse_graph(&read_file(p)?)?, None),
        None => return Err(CliError::Input("gen needs --family or --graph".into())),
    };
    match out {
        Some(p) => write(p, &emit_graph(&graph))?,
        None => print!("{}", emit_graph(&graph)),
    }
    if let Some(p) = triples {
        let labels = labels.ok_or_else(|| CliError::Input("--triples needs a shift:N family".into()))?;
        write(p, &emit_triples(&labels))?;
    }
    if let Some(p) = colouring_out {
        let c = match cfg.colouring {
            Some(ColouringSource::Middle) => {
                let labels = build_family(match &cfg.graph {
                    Some(GraphSource::Family(s)) => s,
                    _ => "",
                }, cfg.params.seed)?
                .triples
                .ok_or_else(|| CliError::Input("`middle` colouring needs a shift:N family".into()))?;
                rainbow_core::generators::middle_element_colouring(&labels)
            }
            Some(ColouringSource::Random) => {
                let palette = cfg.params.palette.unwrap_or_else(|| rainbow_core::invariants::chromatic_number(&graph).chi.max(1) as u32);
                rainbow_core::generators::random_proper_colouring(&graph, palette, cfg.params.seed.unwrap_or(0))?
            }
            Some(ColouringSource::Optimal) => rainbow_core::invariants::chromatic_number(&graph).partition.to_colouring(),
            _ => return Err(CliError::Input("--colouring-out needs --colouring middle, random or optimal".into())),
        };
        write(p, &emit_colouring(&c))?;
    }
    Ok(())
}

fn emit(report: &Report, json: Option<&PathBuf>) -> Result<(), CliError> {
    match json {
        Some(p) => write(p, &report.to_json()),
        None => {
            println!("{}", report.to_json());
            Ok(())
        }
    }
}

fn run() -> Result<u8, CliError> {
    let cli = Cli::parse();
    let (name, common, gen_files) = match cli.command {
        Command::Gen { common, out, colouring_out, triples } => ("gen".to_string(), common, Some((out, colouring_out, triples))),
        Command::Analyze { common } => ("analyze".to_string(), common, None),
        Command::Search { op, common } => (format!("search:{op}"), common, None),
        Command::Machinery { op, common } => (format!("machinery:{op}"), common, None),
        Command::Verify { claim, common } => (format!("verify:{claim}"), common, None),
        Command::Hunt { op, common } => (format!("hunt:{op}"), common, None),
        Command::Run { name, common } => (name, common, None),
    };
    let cfg = config(name, &common)?;
    let report = run_experiment(&cfg);
    if let Some((out, colouring_out, triples)) = &gen_files {
        if report.exit_code() == 0 {
            generate(&cfg, out.as_ref(), colouring_out.as_ref(), triples.as_ref())?;
        }
        // The edge list may occupy stdout; the report goes only to --json.
        if let Some(p) = &common.json {
            write(p, &report.to_json())?;
        }
    } else {
        emit(&report, common.json.as_ref())?;
    }
    match &report.error {
        Some(e) => eprintln!("{}: {:?}: {e}", report.operation, report.status),
        None => eprintln!("{}: {:?} in {} ms", report.operation, report.status, report.elapsed_ms),
    }
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
