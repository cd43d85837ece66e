//! Front end of `cdgraph`: input loading, report envelopes, verification
//! suites and the command dispatcher.

pub mod app;
pub mod cache;
pub mod error;
pub mod inputs;
pub mod report;
pub mod suites;

pub use error::{CliError, CliResult};
