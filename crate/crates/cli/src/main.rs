mod args;
mod commands;
mod error;
mod group;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Count(args) => commands::count::run(args),
        Command::Representatives(args) => commands::representatives::run(args),
        Command::Encode(args) => commands::encode::run(args),
        Command::Simulate(args) => commands::simulate::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Chartable(args) => commands::chartable::run(args),
        Command::Scaling(args) => commands::scaling::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("permchan: {e}");
            e.exit_code()
        }
    }
}
