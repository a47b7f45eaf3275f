use std::process::ExitCode;

use blore::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(run(&Cli::parse()))
}
