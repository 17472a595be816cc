//! One function per subcommand, returning the report text to print.

use latcoh_core::{
    build_root, compute_summary, euler_characteristic, export_root, min_increasing_eu,
    path_eu_weights, path_module, spectrum_unit_interval, LatticePath, LatticePoint,
    MinEuOptions, Region, RootFormat,
};

use crate::config::{
    build_germ, build_model, parse_input, with_pool, CliError, JobOptions, OutputFormat,
};
use crate::output::{
    cohomology_out, min_path_out, spectrum_out, to_json, tower_out, PathOut,
};
use crate::suites::{run_suite, SuiteKind, SuiteOptions, SuiteReport};

pub fn cmd_cohomology(text: &str, opts: &JobOptions) -> Result<String, CliError> {
    let payload = parse_input(text)?;
    let model = build_model(&payload)?;
    let summary = with_pool(opts.parallel, || compute_summary(&model, &Region::Full))??;
    let eu = euler_characteristic(&summary);
    Ok(to_json(&cohomology_out(&summary, eu, opts.max_level)))
}

pub fn cmd_root(text: &str, opts: &JobOptions) -> Result<String, CliError> {
    let payload = parse_input(text)?;
    let model = build_model(&payload)?;
    let root = build_root(&model, &Region::Full)?;
    let format = match opts.format {
        OutputFormat::Json => RootFormat::Json,
        OutputFormat::Dot => RootFormat::Dot,
    };
    Ok(export_root(&root, format))
}

pub fn cmd_path(
    text: &str,
    explicit_path: Option<&str>,
    opts: &JobOptions,
    dp_fallback: bool,
) -> Result<String, CliError> {
    let payload = parse_input(text)?;
    let model = build_model(&payload)?;
    match explicit_path {
        Some(path_text) => {
            let coords: Vec<Vec<i64>> = serde_json::from_str(path_text).map_err(|e| {
                CliError::usage(format!("--path must be a JSON array of lattice points: {e}"))
            })?;
            let path = LatticePath::new(coords.into_iter().map(LatticePoint::new).collect())?;
            let tower = path_module(&path, &model)?;
            let eu_weights = path_eu_weights(&path, &model)?;
            let out = PathOut {
                kind: "path",
                points: path.points().iter().map(|p| p.coords().to_vec()).collect(),
                eu_module: tower.eu(),
                module: tower_out(&tower),
                eu_weights,
            };
            Ok(to_json(&out))
        }
        None => {
            let result = min_increasing_eu(
                &model,
                MinEuOptions {
                    step_budget: opts.budget,
                    dp_fallback,
                },
            )?;
            Ok(to_json(&min_path_out(&result)))
        }
    }
}

pub fn cmd_spectrum(text: &str) -> Result<String, CliError> {
    let germ = build_germ(&parse_input(text)?)?;
    let slice = spectrum_unit_interval(&germ)?;
    Ok(to_json(&spectrum_out(&slice)))
}

/// Runs a suite; the flag is true when any trial failed.
pub fn cmd_verify(
    kind: SuiteKind,
    opts: &SuiteOptions,
    parallel: Option<usize>,
) -> Result<(String, bool), CliError> {
    let report: SuiteReport = with_pool(parallel, || run_suite(kind, opts))?;
    let failed = report.failed > 0;
    Ok((to_json(&report), failed))
}
