//! The `nlspec` command line: argument parsing and report formatting over
//! `nlspec-core`.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use thiserror::Error;

pub use args::{Cli, Command, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Operational(String),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("writing json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_ERROR,
        }
    }
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verification reported FAIL.
    Failed,
    /// Some inputs could not be processed; the rest were reported.
    Partial,
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the process exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match commands::dispatch(cli.command, out, err) {
        Ok(Status::Ok) => EXIT_OK,
        Ok(Status::Failed) => EXIT_FAIL,
        Ok(Status::Partial) => EXIT_ERROR,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
