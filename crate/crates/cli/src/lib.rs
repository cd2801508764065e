//! Command-line front end for the `qnatural` engine: `eval`, `compare`,
//! `sweep` and `list`, with CSV, JSON or plain-text output.
//!
//! Exit status is 0 when every evaluation converged, 1 when some row failed
//! or did not converge, and 2 on usage errors.

pub mod args;
pub mod catalog;
pub mod commands;
pub mod output;
pub mod report;
pub mod selector;
pub mod suites;

use args::{Cli, Command, Format};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

/// Runs a parsed command line and returns the exit status.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let status = |ok: bool| if ok { 0 } else { 1 };
    match &cli.command {
        Command::Eval(a) => {
            let run = commands::eval(a)?;
            output::emit(
                &output::render(&run.doc, a.common.format)?,
                a.common.output.as_deref(),
            )?;
            Ok(status(run.ok))
        }
        Command::Compare(a) => {
            let (run, report) = commands::compare(a)?;
            output::emit(
                &output::render(&run.doc, a.common.format)?,
                a.common.output.as_deref(),
            )?;
            if let (Some(path), Some(report)) = (&a.report, report) {
                let mut text = serde_json::to_string_pretty(&report)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                text.push('\n');
                output::emit(&text, Some(path))?;
            }
            Ok(status(run.ok))
        }
        Command::Sweep(a) => {
            let run = commands::sweep(a)?;
            output::emit(
                &output::render(&run.doc, a.common.format)?,
                a.common.output.as_deref(),
            )?;
            Ok(status(run.ok))
        }
        Command::List(a) => {
            let rows = commands::list(a)?;
            let text = match a.format {
                Format::Text => catalog::text(&rows),
                Format::Csv => output::csv_string(&rows)?,
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&rows)
                        .map_err(|e| CliError::Io(e.to_string()))?;
                    s.push('\n');
                    s
                }
            };
            output::emit(&text, a.output.as_deref())?;
            Ok(0)
        }
    }
}
