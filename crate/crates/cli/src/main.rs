use std::process::ExitCode;

use clap::Parser;
use ktweb::{run, Cli};

fn main() -> ExitCode {
    ExitCode::from(run(&Cli::parse()))
}
