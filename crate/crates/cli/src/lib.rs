//! Library side of the `latcoh` command-line tool: input schemas, report
//! shapes, verification suites, and the per-subcommand entry points.

pub mod config;
pub mod output;
pub mod run;
pub mod suites;

pub use config::{
    build_germ, build_model, build_pair, parse_input, resolve_parallelism, with_pool, CliError,
    ExitClass, HCircField, JobConfig, JobOptions, JobPayload, OutputFormat,
};
pub use run::{cmd_cohomology, cmd_path, cmd_root, cmd_spectrum, cmd_verify};
pub use suites::{run_suite, SuiteKind, SuiteOptions, SuiteReport, TrialFailure};
