use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use latcoh_cli::{
    cmd_cohomology, cmd_path, cmd_root, cmd_spectrum, cmd_verify, resolve_parallelism, CliError,
    ExitClass, JobOptions, OutputFormat, SuiteKind, SuiteOptions,
};

/// Lattice cohomology, graded roots and Hodge spectra of weight functions
/// on integer lattices.
#[derive(Parser)]
#[command(name = "latcoh", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Euler,
    Theorem37,
    Cdp,
    Stability,
    #[value(name = "germ-oracle")]
    GermOracle,
}

impl From<SuiteArg> for SuiteKind {
    fn from(arg: SuiteArg) -> SuiteKind {
        match arg {
            SuiteArg::Euler => SuiteKind::Euler,
            SuiteArg::Theorem37 => SuiteKind::Theorem37,
            SuiteArg::Cdp => SuiteKind::Cdp,
            SuiteArg::Stability => SuiteKind::Stability,
            SuiteArg::GermOracle => SuiteKind::GermOracle,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Graded module summary of the full-rectangle tower (JSON to stdout).
    Cohomology {
        /// Input JSON file; stdin when omitted.
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Report levels only up to this value.
        #[arg(long)]
        max_level: Option<i64>,
        /// Worker threads (fallback: LATCOH_THREADS).
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Graded root of the tower, as JSON or DOT.
    Root {
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Write the report to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Path module and both Euler characteristic formulas for an explicit
    /// path, or the minimum over increasing paths when none is given.
    Path {
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// JSON array of lattice points, e.g. [[0,0],[1,0],[1,1]].
        #[arg(long)]
        path: Option<String>,
        /// Exhaustive-enumeration budget in total unit steps.
        #[arg(long, default_value_t = 12)]
        budget: usize,
        /// Fail instead of switching to the lattice dynamic program past
        /// the budget.
        #[arg(long)]
        no_dp: bool,
    },
    /// Hodge spectrum slice in (0,1) and the geometric genus of a
    /// weighted homogeneous germ.
    Spectrum {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Randomized and exhaustive verification suites; exits 2 on failure.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Lattice rank for generated instances.
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Largest rectangle coordinate for generated instances.
        #[arg(long, default_value_t = 4)]
        cmax: i64,
        /// Path-enumeration budget in total unit steps.
        #[arg(long, default_value_t = 12)]
        budget: usize,
        /// Largest Brieskorn exponent for the germ-oracle suite.
        #[arg(long, default_value_t = 12)]
        amax: i64,
        #[arg(long)]
        parallel: Option<usize>,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::data(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::data(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn dispatch(command: Command) -> Result<(String, Option<PathBuf>, ExitClass), CliError> {
    match command {
        Command::Cohomology {
            input,
            max_level,
            parallel,
        } => {
            let text = read_input(&input)?;
            let options = JobOptions {
                max_level,
                parallel: resolve_parallelism(parallel)?,
                ..JobOptions::default()
            };
            Ok((cmd_cohomology(&text, &options)?, None, ExitClass::Success))
        }
        Command::Root {
            input,
            format,
            output,
        } => {
            let text = read_input(&input)?;
            let options = JobOptions {
                format: match format {
                    FormatArg::Json => OutputFormat::Json,
                    FormatArg::Dot => OutputFormat::Dot,
                },
                ..JobOptions::default()
            };
            Ok((cmd_root(&text, &options)?, output, ExitClass::Success))
        }
        Command::Path {
            input,
            path,
            budget,
            no_dp,
        } => {
            let text = read_input(&input)?;
            let options = JobOptions {
                budget,
                ..JobOptions::default()
            };
            Ok((
                cmd_path(&text, path.as_deref(), &options, !no_dp)?,
                None,
                ExitClass::Success,
            ))
        }
        Command::Spectrum { input } => {
            let text = read_input(&input)?;
            Ok((cmd_spectrum(&text)?, None, ExitClass::Success))
        }
        Command::Verify {
            suite,
            seed,
            trials,
            rank,
            cmax,
            budget,
            amax,
            parallel,
        } => {
            let opts = SuiteOptions {
                seed,
                trials,
                rank,
                cmax,
                budget,
                amax,
            };
            let parallel = resolve_parallelism(parallel)?;
            let (report, failed) = cmd_verify(suite.into(), &opts, parallel)?;
            Ok((
                report,
                None,
                if failed {
                    ExitClass::VerifyFailed
                } else {
                    ExitClass::Success
                },
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version are not usage errors
            let benign = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if benign {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(ExitClass::Usage as u8)
            };
        }
    };
    match dispatch(cli.command) {
        Ok((text, output, class)) => {
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text.as_bytes()) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(ExitClass::Data as u8);
                    }
                }
                None => println!("{text}"),
            }
            ExitCode::from(class as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.class as u8)
        }
    }
}
