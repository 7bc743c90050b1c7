//! File formats, JSON report documents and the `proxrem` command line.

pub mod app;
pub mod formats;
pub mod report;

pub use app::{exit, run_from, Cli, CliError};
