use std::process::ExitCode;

use clap::Parser;
use koshliakov_cli::{emit, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| emit(&cli, &outcome));
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            match &e {
                CliError::Numeric(k) if k.is_non_convergence() => {
                    eprintln!("koshliakov: numerical non-convergence: {k}");
                }
                other => eprintln!("koshliakov: {other}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
