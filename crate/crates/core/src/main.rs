use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::Parser;
use zeckstep::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli, std::io::stderr().is_terminal());
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
