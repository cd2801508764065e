use std::process::ExitCode;

use clap::Parser;
use qnatural_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match qnatural_cli::run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("qnatural: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
