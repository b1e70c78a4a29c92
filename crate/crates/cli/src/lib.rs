//! Command-line front end for `casimir-shell-core`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 non-converged result or a
//! failed self-test.

pub mod atom_file;
pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use config::{Cli, Command};

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let text = e.render().to_string();
                    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
                    let _ = writeln!(err, "{line}");
                    1
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Energy(a) => commands::energy(a, out),
        Command::Sweep(a) => commands::sweep(a, out),
        Command::Plate(a) => commands::plate(a, out),
        Command::Asymptote(a) => commands::asymptote(a, out),
        Command::Bessel(a) => commands::bessel(a, out),
        Command::Selftest => commands::selftest(out),
    };
    match result {
        Ok(status) => {
            if status == commands::Status::NotConverged {
                let _ = writeln!(err, "warning: result did not reach the requested tolerance");
            }
            status.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}
