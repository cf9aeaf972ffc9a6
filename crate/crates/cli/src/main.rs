mod args;
mod run;

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use run::Failure;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };

    match panic::catch_unwind(AssertUnwindSafe(|| run::run(&cli))) {
        Ok(Ok(output)) => match emit(&cli, &output.text) {
            Ok(()) if output.all_passed => ExitCode::SUCCESS,
            Ok(()) => {
                eprintln!("error: one or more verification checks failed");
                ExitCode::from(2)
            }
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                ExitCode::from(1)
            }
        },
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
        // The panic hook has already printed the message.
        Err(_) => ExitCode::from(2),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.common.output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
