//! `xbl`: command-line driver for the time-and-band limiting pipeline.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 internal error.

mod commands;
mod config;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::Failure;
use config::{Cli, RunConfig, OUT_ENV};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let (name, args) = cli.command.parts();
    let env_out = std::env::var_os(OUT_ENV).filter(|v| !v.is_empty()).map(Into::into);
    let outcome = RunConfig::resolve(args, env_out)
        .map_err(Failure::Usage)
        .and_then(|cfg| match std::panic::catch_unwind(|| commands::run(name, &cfg)) {
            Ok(r) => r,
            Err(_) => Err(Failure::Internal("unexpected panic".into())),
        });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Verification(n) => eprintln!("verification failed: {n} check(s)"),
                Failure::Internal(m) => eprintln!("internal error: {m}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
