//! Command-line front end: the element DSL, subcommand dispatch and report
//! rendering.

pub mod commands;
pub mod dsl;
pub mod props;

use std::time::Instant;

pub use commands::{execute, Cli, Format, Outcome, UsageError};

/// Renders a finished command. `elapsed_ms` is left out when `None` so that
/// output can be compared byte for byte.
pub fn render(outcome: &Outcome, format: Format, elapsed_ms: Option<u128>) -> String {
    match format {
        Format::Json => {
            let doc = outcome.report.to_json(&outcome.bindings, elapsed_ms);
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => outcome.report.to_text(),
    }
}

/// Parses nothing; runs the already-parsed command and returns its output
/// and exit status.
pub fn run(cli: &Cli) -> (String, i32) {
    let start = Instant::now();
    match execute(cli) {
        Ok(outcome) => {
            let out = render(&outcome, cli.format, Some(start.elapsed().as_millis()));
            (out, if outcome.report.passed() { 0 } else { 1 })
        }
        Err(e) => (format!("error: {e}\n"), 2),
    }
}
