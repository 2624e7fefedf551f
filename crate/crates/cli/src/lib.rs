//! Front end for `homkit-core`: file loading, the witness cache, check
//! manifests, the randomized property suites and the command implementations.

pub mod cache;
pub mod commands;
pub mod exit;
pub mod load;
pub mod manifest;
pub mod suites;

pub use exit::{exit_code, CliError, Outcome};
