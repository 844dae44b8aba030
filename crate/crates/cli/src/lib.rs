//! File formats, reports and subcommands behind the `knotcert` binary.

pub mod commands;
pub mod fixtures;
pub mod format;
pub mod report;

pub use commands::{CliError, VerifyInputs};
pub use report::CliReport;
