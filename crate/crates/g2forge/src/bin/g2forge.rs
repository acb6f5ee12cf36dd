//! Command-line front end: runs the verification suite and the individual
//! representation-theoretic computations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use g2forge::report::{self, Status};
use g2forge::repr::{self, Space};
use g2forge::subalgebras::Label;

#[derive(Parser)]
#[command(
    name = "g2forge",
    version,
    about = "Exact verification of the compact Lie algebra g2, its subalgebras, and their geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite (exit 0 iff every check passes)
    Verify {
        /// Only run checks whose id matches this glob, e.g. 'h8.*'
        #[arg(long)]
        filter: Option<String>,
        /// Write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Seed for the sampled test points
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the su(2)-module decomposition of a space under a subalgebra
    Decompose {
        /// Subalgebra label: h3, h5, h7 or h8
        label: String,
        /// Space: o0 (imaginary octonions) or g2 (adjoint)
        space: String,
    },
    /// Print the Dynkin index of a three-dimensional subalgebra
    Index {
        /// Subalgebra label: h3, h5, h7 or h8
        label: String,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, Box<dyn std::error::Error>> {
    match Cli::parse().command {
        Command::Verify { filter, json, seed } => {
            let report = report::run_suite(filter.as_deref(), seed)?;
            for check in &report.checks {
                let status = match check.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                println!(
                    "{status}  {:<38} [{:>5} ms]  {}",
                    check.id, check.wall_time_ms, check.claim
                );
                if let Some(w) = &check.witness {
                    println!("      witness: {w}");
                }
            }
            println!(
                "{} checks: {} passed, {} failed (seed {})",
                report.checks.len(),
                report.passed(),
                report.failed(),
                report.seed
            );
            if let Some(path) = json {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
                println!("report written to {}", path.display());
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Decompose { label, space } => {
            let label: Label = label.parse()?;
            let space: Space = space.parse()?;
            let g2 = g2forge::g2::G2::build()?;
            let sub = g2forge::subalgebras::build(&g2, label)?;
            let dec = repr::sl2_decompose(&g2, &sub, space)?;
            let (z_e, z_h) = dec.centralizer_dims();
            println!("{dec}; dim z(e)={z_e}, dim z(h)={z_h}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Index { label } => {
            let label: Label = label.parse()?;
            let g2 = g2forge::g2::G2::build()?;
            let sub = g2forge::subalgebras::build(&g2, label)?;
            let index = repr::dynkin_index(&g2, &sub)?;
            println!("{index}");
            Ok(ExitCode::SUCCESS)
        }
    }
}
