//! `ksinv`: Kreck–Stolz invariants and diffeomorphic sequences from the
//! command line. See `ksinv --help`.

mod args;
mod commands;
mod render;

use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(commands::run(std::env::args_os()))
}
