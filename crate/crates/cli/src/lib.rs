//! The `fermix` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

pub mod args;
mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use commands::{execute, Report, RunConfig};

/// Environment variable overriding the default verification tolerance.
pub const TOL_ENV: &str = "FERMIX_TOL";

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Why a command did not succeed.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Bad flags, indices, range or output path.
    Usage(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(message) => f.write_str(message),
        }
    }
}

impl From<fermix_core::Error> for Failure {
    fn from(e: fermix_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parse `args` (program name first), execute, and write the result to
/// `out` (or the `--out` file) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, tol_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_SUCCESS
            };
        }
    };
    match execute(&cli.command, tol_env) {
        Ok(report) => {
            let text = render::render(&report);
            let written = match &report.config.out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(message) = written {
                let _ = writeln!(err, "error: {message}");
                return EXIT_USAGE;
            }
            if report.passed() {
                EXIT_SUCCESS
            } else {
                let _ = writeln!(err, "error: verification failed");
                EXIT_VERIFICATION_FAILED
            }
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            EXIT_USAGE
        }
    }
}
