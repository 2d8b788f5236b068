//! Greedy set cover over (0,1) incidence matrices with a minimum column
//! density, plus the coverage-trajectory bounds that such a density implies.
//!
//! Rows are subsets, columns are elements. When every column holds at least
//! `c` ones, each greedy step over `m` rows must cover at least
//! `c * u_k / (m - k)` of the `u_k` still-uncovered columns, because every
//! one in an uncovered column sits in a row that has not been picked yet.
//! [`bounds`] turns that into a per-step upper bound on the uncovered
//! fraction and compares it with the classical `(1 - gamma)^k` estimate.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, JSON/CSV
//! output and the command-line tool live in the `setcover` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod bitrow;
pub mod bounds;
pub mod generate;
pub mod greedy;
pub mod instance;
pub mod oracle;
pub mod rng;

pub use bitrow::BitRow;
pub use bounds::{BoundEntry, BoundKind, BoundSeries, BoundsError, CoverSizeBound};
pub use generate::{GenError, GenSpec, Model};
pub use greedy::{CoverTrace, GreedyError};
pub use instance::{DensitySpec, Instance, InstanceError};
pub use oracle::{OracleError, OracleReport, Violation, ViolationKind};

/// Absolute slack allowed when an integer count is compared with `n * bound`.
pub const BOUND_SLACK: f64 = 1e-9;
