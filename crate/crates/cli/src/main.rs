//! `linenet`: exact verification runs printed as JSON reports.
//!
//! Exit status is 0 when every check passes, 1 when a check fails (the
//! failing certificates are in the report), and 2 when the input is
//! malformed or violates a precondition.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use linenet_core::cube::derived_eps;
use linenet_core::report::RunReport;
use linenet_core::Scalar;

use crate::input::{parse_scalar, CliError};

#[derive(Parser)]
#[command(
    name = "linenet",
    version,
    about = "Exact verification of line-stabbing counterexamples"
)]
struct Cli {
    /// Leave out the wall-clock time so that repeated runs print identical bytes.
    #[arg(long, global = true)]
    untimed: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a witness polygon from {"alphas", "b", "r"} JSON.
    RulingWitness {
        /// JSON file, or `-` for standard input.
        #[arg(long)]
        input: PathBuf,
    },
    /// Refute a set of at most k adversary lines on the rulings A = {1..n}.
    NetRefute {
        #[arg(long, value_parser = parse_scalar)]
        epsilon: Scalar,
        #[arg(long)]
        k: usize,
        /// Defaults to the least admissible n.
        #[arg(long)]
        n: Option<usize>,
        /// JSON array of lines {"anchor", "dir"}.
        #[arg(long)]
        adversary: PathBuf,
        /// Inflation radius and jitter bound.
        #[arg(long, num_args = 2, value_names = ["DELTA_PRIME", "JITTER"], value_parser = parse_scalar)]
        harden: Option<Vec<Scalar>>,
        /// Seed for the jitter.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the cube incidences, the four joint-region cases and the diagonal claim.
    CubeVerify {
        #[arg(long, value_parser = parse_scalar)]
        eps: Option<Scalar>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Place three cubes, certify their red lines and optionally sample 9-point hulls.
    CubeAssemble {
        /// Distance between cube centers for the default placements.
        #[arg(long, default_value = "300", value_parser = parse_scalar)]
        separation: Scalar,
        /// JSON array of placements {"rotation", "translation"} instead of the defaults.
        #[arg(long)]
        placements: Option<PathBuf>,
        #[arg(long, value_parser = parse_scalar)]
        eps: Option<Scalar>,
        /// Number of sampled 9-point hulls.
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide separation of a ray triple and describe its joint region.
    RaysJointRegion {
        /// JSON array of three rays {"origin", "dir"}.
        #[arg(
            long,
            conflicts_with = "diagonal",
            required_unless_present = "diagonal"
        )]
        input: Option<PathBuf>,
        /// Check the ray triples of cube diagonal 1..4 instead.
        #[arg(long)]
        diagonal: Option<usize>,
    },
    /// Check that lines meeting a body in S still meet it after projection to S.
    ProjectD {
        #[arg(long)]
        d: usize,
        /// JSON {"body", "line"?}; without it a fixed witness triangle is used.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Random hitting lines to test (default 100 without a line, else 0).
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the fixed exact fixtures.
    Selftest,
}

fn run(cmd: Command) -> Result<RunReport, CliError> {
    match cmd {
        Command::RulingWitness { input } => commands::ruling_witness(&input),
        Command::NetRefute {
            epsilon,
            k,
            n,
            adversary,
            harden,
            seed,
        } => commands::net_refute(&commands::NetRefute {
            epsilon: &epsilon,
            k,
            n,
            adversary: &adversary,
            harden: harden.as_deref().map(|h| (&h[0], &h[1])),
            seed,
        }),
        Command::CubeVerify { eps, trials, seed } => {
            commands::cube_verify(&eps.unwrap_or_else(derived_eps), trials, seed)
        }
        Command::CubeAssemble {
            separation,
            placements,
            eps,
            trials,
            seed,
        } => commands::cube_assemble(
            &separation,
            placements.as_deref(),
            &eps.unwrap_or_else(derived_eps),
            trials,
            seed,
        ),
        Command::RaysJointRegion { input, diagonal } => {
            commands::rays_joint_region(input.as_deref(), diagonal)
        }
        Command::ProjectD {
            d,
            input,
            trials,
            seed,
        } => commands::project_d(d, input.as_deref(), trials, seed),
        Command::Selftest => commands::selftest(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = if cli.untimed {
        report
    } else {
        report.with_wall_time(start.elapsed())
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize");
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        for c in report.failed() {
            eprintln!("check failed: {}", c.name);
        }
        ExitCode::from(1)
    }
}
