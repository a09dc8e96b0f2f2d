mod commands;
mod load;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Modular Terwilliger algebras of association schemes over GF(p).
#[derive(Parser)]
#[command(name = "terwilliger", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one scheme over one prime field
    Analyze(commands::analyze::Args),
    /// Analyse every scheme file in a directory over several primes
    Batch(commands::batch::Args),
    /// Print a generated scheme in the canonical file format
    Gen(commands::gen::Args),
    /// Cross-check the fast algorithms against brute-force oracles
    Verify(commands::verify::Args),
}

/// Exit statuses shared by all subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Usage = 1,
    Invalid = 2,
    Inconsistent = 3,
}

pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::Usage as u8 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => commands::analyze::run(a),
        Command::Batch(a) => commands::batch::run(a),
        Command::Gen(a) => commands::gen::run(a),
        Command::Verify(a) => commands::verify::run(a),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status as u8)
        }
    }
}
