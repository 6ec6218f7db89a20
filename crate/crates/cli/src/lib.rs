//! File formats, command dispatch and reports for the `leibniz` tool.

pub mod commands;
pub mod formats;
pub mod report;

pub use commands::{run, Cli, CliError, Command};
pub use report::Report;
