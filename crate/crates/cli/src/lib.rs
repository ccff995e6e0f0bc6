//! Command-line front end: configuration loading, experiment drivers, and
//! byte-deterministic reports for the unit-ball laboratory.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{run_command, CommandError};
pub use config::{ConfigError, LabConfig, Overrides};
pub use report::{Format, Report, Value};
