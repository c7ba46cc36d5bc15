//! Library side of the `rainbow` command: input formats, `--family` specs,
//! experiment configuration and the JSON report produced by every run.

pub mod experiment;
pub mod family;
pub mod io;

use std::path::PathBuf;

use serde::Serialize;

pub use experiment::run_experiment;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Core(#[from] rainbow_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSource {
    File(PathBuf),
    Family(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColouringSource {
    File(PathBuf),
    /// Middle element of each triple; shift graphs only.
    Middle,
    /// Seeded random proper colouring.
    Random,
    /// An optimal colouring from the exact chromatic number search.
    Optimal,
    /// Every proper colouring, up to renaming.
    Enumerate,
}

impl std::str::FromStr for ColouringSource {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "middle" => ColouringSource::Middle,
            "random" => ColouringSource::Random,
            "optimal" => ColouringSource::Optimal,
            "enumerate" => ColouringSource::Enumerate,
            path => ColouringSource::File(PathBuf::from(path)),
        })
    }
}

/// Operation parameters; unset fields take per-operation defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    /// Ground set size for shift-graph experiments.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<usize>>,
    /// Grading blocks in order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_prime: Option<u64>,
    /// Extra dichotomy thresholds, `"3=5,4=9"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_table: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub palette: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checkpoint: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSource>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colouring: Option<ColouringSource>,
    pub params: Params,
}

impl ExperimentConfig {
    pub fn new(experiment: &str) -> Self {
        ExperimentConfig {
            experiment: experiment.to_string(),
            graph: None,
            colouring: None,
            params: Params::default(),
        }
    }

    pub fn with_family(mut self, spec: &str) -> Self {
        self.graph = Some(GraphSource::Family(spec.to_string()));
        self
    }

    pub fn with_colouring(mut self, source: ColouringSource) -> Self {
        self.colouring = Some(source);
        self
    }

    /// Referenced files exist, budgets are positive, and randomised inputs
    /// come with a seed.
    pub fn validate(&self) -> Result<(), CliError> {
        let mut files = Vec::new();
        if let Some(GraphSource::File(p)) = &self.graph {
            files.push(p);
        }
        if let Some(ColouringSource::File(p)) = &self.colouring {
            files.push(p);
        }
        if let Some(p) = &self.params.cover {
            files.push(p);
        }
        if let Some(p) = files.into_iter().find(|p| !p.is_file()) {
            return Err(CliError::Input(format!("file not found: {}", p.display())));
        }
        if self.params.budget == Some(0) {
            return Err(CliError::Input("budget must be positive".into()));
        }
        if self.params.jobs == Some(0) {
            return Err(CliError::Input("jobs must be positive".into()));
        }
        let random_graph = matches!(&self.graph, Some(GraphSource::Family(f)) if family::is_randomised(f));
        let random_colouring = self.colouring == Some(ColouringSource::Random);
        if (random_graph || random_colouring) && self.params.seed.is_none() {
            return Err(CliError::Input("a randomised input needs --seed".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    BudgetExhausted,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::BudgetExhausted => 2,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InputDigests {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colouring: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub operation: String,
    pub version: &'static str,
    pub status: Status,
    pub config: ExperimentConfig,
    pub inputs: InputDigests,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub result: serde_json::Value,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
