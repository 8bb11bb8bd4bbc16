//! `framedyn` command-line tool.
//!
//! Exit codes: 0 success, 1 error, 2 a census or evolve orbit hit its cap,
//! 3 a probe saw influence outside the light cone.

mod args;
mod commands;
mod error;
mod source;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Status;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Complex(a) => commands::complex(a),
        Command::Evolve(a) => commands::evolve(a),
        Command::Census(a) => commands::census_cmd(a),
        Command::Probe(a) => commands::probe(a),
        Command::Trace(a) => commands::trace(a),
        Command::Occupancy(a) => commands::occupancy(a),
    };
    match result {
        Ok(Status::Done) => ExitCode::SUCCESS,
        Ok(Status::Truncated) => ExitCode::from(2),
        Ok(Status::ProbeViolation) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
