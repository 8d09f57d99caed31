//! Command-line front end: measurements, verification sweeps, convergence
//! tables and SVG plots, built on `taxicab-core`.

pub mod commands;
pub mod error;
pub mod format;
pub mod plot;
pub mod report;
pub mod verify;

pub use error::{CliError, CliResult};
