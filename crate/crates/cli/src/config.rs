//! Input parsing and validation for the CLI: JSON job payloads, options,
//! and the exit-code discipline.

use serde::Deserialize;

use latcoh_core::{
    reduced_weight, weight_from_pair, Error as CoreError, HilbertPair, LatticePoint, Rectangle,
    WeightedHomogeneousGerm, WeightModel,
};

/// Process exit codes: 0 success, 2 verification failure, 64 usage,
/// 65 data, 70 internal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitClass {
    Success = 0,
    VerifyFailed = 2,
    Usage = 64,
    Data = 65,
    Internal = 70,
}

#[derive(Debug)]
pub struct CliError {
    pub class: ExitClass,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            class: ExitClass::Usage,
            message: message.into(),
        }
    }

    pub fn data(message: impl Into<String>) -> CliError {
        CliError {
            class: ExitClass::Data,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> CliError {
        CliError {
            class: ExitClass::Internal,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> CliError {
        let class = match err {
            CoreError::UnknownFormat { .. } => ExitClass::Usage,
            CoreError::Internal(_) | CoreError::BoundarySquare { .. } => ExitClass::Internal,
            _ => ExitClass::Data,
        };
        CliError {
            class,
            message: err.to_string(),
        }
    }
}

/// The `h_circ` field of a Hilbert pair job: an explicit table or the
/// keyword `"sym"` for the reflected default.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum HCircField {
    Table(Vec<i64>),
    Keyword(String),
}

/// One job payload, discriminated by `kind`.
#[derive(Clone, Debug)]
pub enum JobPayload {
    WeightTable {
        rank: usize,
        c: Vec<i64>,
        values: Vec<i64>,
    },
    HilbertPair {
        rank: usize,
        c: Vec<i64>,
        h: Vec<i64>,
        h_circ: HCircField,
    },
    WeightedHomogeneous {
        weights: Vec<i64>,
        degree: i64,
    },
}

#[derive(Deserialize)]
struct KindProbe {
    kind: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightTableFields {
    #[allow(dead_code)]
    kind: String,
    rank: usize,
    c: Vec<i64>,
    values: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HilbertPairFields {
    #[allow(dead_code)]
    kind: String,
    rank: usize,
    c: Vec<i64>,
    h: Vec<i64>,
    h_circ: HCircField,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightedHomogeneousFields {
    #[allow(dead_code)]
    kind: String,
    weights: Vec<i64>,
    degree: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Dot,
}

/// Options shared by the subcommands.
#[derive(Clone, Debug)]
pub struct JobOptions {
    pub max_level: Option<i64>,
    pub budget: usize,
    pub seed: u64,
    pub parallel: Option<usize>,
    pub format: OutputFormat,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            max_level: None,
            budget: 12,
            seed: 0,
            parallel: None,
            format: OutputFormat::Json,
        }
    }
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub payload: JobPayload,
    pub options: JobOptions,
}

fn parse_strict<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    let mut deserializer = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut deserializer).map_err(|err| {
        let path = err.path().to_string();
        let at = if path == "." {
            String::new()
        } else {
            format!(" at `{path}`")
        };
        CliError::usage(format!("input schema error{at}: {}", err.inner()))
    })
}

/// Strict JSON parsing with a path to the offending field on schema
/// errors; the `kind` field selects the schema.
pub fn parse_input(text: &str) -> Result<JobPayload, CliError> {
    let probe: KindProbe = serde_json::from_str(text)
        .map_err(|e| CliError::usage(format!("input schema error: {e}")))?;
    match probe.kind.as_str() {
        "weight_table" => {
            let f: WeightTableFields = parse_strict(text)?;
            Ok(JobPayload::WeightTable {
                rank: f.rank,
                c: f.c,
                values: f.values,
            })
        }
        "hilbert_pair" => {
            let f: HilbertPairFields = parse_strict(text)?;
            Ok(JobPayload::HilbertPair {
                rank: f.rank,
                c: f.c,
                h: f.h,
                h_circ: f.h_circ,
            })
        }
        "weighted_homogeneous" => {
            let f: WeightedHomogeneousFields = parse_strict(text)?;
            Ok(JobPayload::WeightedHomogeneous {
                weights: f.weights,
                degree: f.degree,
            })
        }
        other => Err(CliError::usage(format!(
            "input schema error at `kind`: unknown job kind `{other}`"
        ))),
    }
}

fn rectangle_from(rank: usize, c: &[i64]) -> Result<Rectangle, CliError> {
    if c.len() != rank {
        return Err(CliError::data(format!(
            "field `c` has {} coordinates but `rank` is {rank}",
            c.len()
        )));
    }
    Ok(Rectangle::new(LatticePoint::new(c.to_vec()))?)
}

/// Builds the Hilbert pair of a `hilbert_pair` payload.
pub fn build_pair(
    rank: usize,
    c: &[i64],
    h: &[i64],
    h_circ: &HCircField,
) -> Result<HilbertPair, CliError> {
    let rect = rectangle_from(rank, c)?;
    match h_circ {
        HCircField::Table(table) => {
            Ok(HilbertPair::new(rect, h.to_vec(), table.to_vec())?)
        }
        HCircField::Keyword(word) if word == "sym" => {
            Ok(HilbertPair::with_sym(rect, h.to_vec())?)
        }
        HCircField::Keyword(word) => Err(CliError::usage(format!(
            "field `h_circ` must be a table or the keyword \"sym\", got \"{word}\""
        ))),
    }
}

pub fn build_germ(payload: &JobPayload) -> Result<WeightedHomogeneousGerm, CliError> {
    match payload {
        JobPayload::WeightedHomogeneous { weights, degree } => {
            Ok(WeightedHomogeneousGerm::new(weights.clone(), *degree)?)
        }
        _ => Err(CliError::data(
            "this subcommand requires a weighted_homogeneous payload",
        )),
    }
}

/// Turns any payload into the weight model it describes: tables directly,
/// pairs through weight synthesis, germs through the reduced pipeline.
pub fn build_model(payload: &JobPayload) -> Result<WeightModel, CliError> {
    match payload {
        JobPayload::WeightTable { rank, c, values } => {
            let rect = rectangle_from(*rank, c)?;
            Ok(WeightModel::new(rect, values.clone())?)
        }
        JobPayload::HilbertPair {
            rank,
            c,
            h,
            h_circ,
        } => {
            let pair = build_pair(*rank, c, h, h_circ)?;
            Ok(weight_from_pair(&pair))
        }
        JobPayload::WeightedHomogeneous { .. } => {
            let germ = build_germ(payload)?;
            Ok(reduced_weight(&germ)?)
        }
    }
}

/// Thread count: explicit flag, then the LATCOH_THREADS environment
/// variable, then the rayon default.
pub fn resolve_parallelism(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if let Some(p) = flag {
        if p == 0 {
            return Err(CliError::usage("--parallel must be at least 1"));
        }
        return Ok(Some(p));
    }
    match std::env::var("LATCOH_THREADS") {
        Ok(value) => {
            let p: usize = value
                .parse()
                .map_err(|_| CliError::usage(format!("LATCOH_THREADS=`{value}` is not a number")))?;
            if p == 0 {
                return Err(CliError::usage("LATCOH_THREADS must be at least 1"));
            }
            Ok(Some(p))
        }
        Err(_) => Ok(None),
    }
}

/// Runs `f` inside a rayon pool of the resolved size (or the global pool).
pub fn with_pool<T: Send>(
    parallel: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    match parallel {
        None => Ok(f()),
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}
