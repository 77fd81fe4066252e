use std::process::ExitCode;

use clap::Parser;
use lensknot_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = lensknot_cli::run(&cli).and_then(|report| lensknot_cli::write_output(cli.output.output.as_deref(), &report));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lensknot: error: {e}");
            ExitCode::FAILURE
        }
    }
}
