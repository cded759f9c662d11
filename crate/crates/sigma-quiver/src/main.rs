use std::process::ExitCode;

use clap::Parser;
use sigma_quiver::cli::{run, Cli};

fn main() -> ExitCode {
    run(Cli::parse())
}
