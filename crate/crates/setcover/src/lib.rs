//! File formats and the command-line front end for `setcover-core`.
//!
//! * [`text`]: the plain-text instance format.
//! * [`trace`]: JSON documents for cover traces and oracle reports.
//! * [`table`]: CSV for bound series and experiment records.
//! * [`cli`]: the `setcover` binary's subcommands.

pub mod cli;
pub mod table;
pub mod text;
pub mod trace;

pub use setcover_core as core;
