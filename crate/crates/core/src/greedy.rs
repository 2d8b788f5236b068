//! Two-phase cover: greedy max-gain row selection, then a patch phase that
//! covers whatever is left one column at a time.

use alloc::vec::Vec;
use core::fmt;

use crate::bitrow::BitRow;
use crate::instance::Instance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyError {
    IndexOutOfRange {
        row: usize,
        m: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// No row covers any uncovered column.
    NoProgress,
    Uncoverable {
        column: usize,
    },
}

impl fmt::Display for GreedyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreedyError::IndexOutOfRange { row, m } => {
                write!(f, "row index {row} out of range (m = {m})")
            }
            GreedyError::LengthMismatch { expected, found } => {
                write!(f, "uncovered set has length {found}, expected {expected}")
            }
            GreedyError::NoProgress => write!(f, "no row covers an uncovered column"),
            GreedyError::Uncoverable { column } => {
                write!(f, "column {column} is not covered by any unselected row")
            }
        }
    }
}

impl core::error::Error for GreedyError {}

/// Record of a cover run.
///
/// `uncovered_counts[k]` is the number of uncovered columns after `k` greedy
/// steps, so it has one more entry than `greedy_rows`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverTrace {
    pub greedy_rows: Vec<usize>,
    pub uncovered_counts: Vec<usize>,
    pub patch_rows: Vec<usize>,
}

impl CoverTrace {
    pub fn steps(&self) -> usize {
        self.greedy_rows.len()
    }

    /// Uncovered count after the last greedy step.
    pub fn final_uncovered(&self) -> usize {
        *self.uncovered_counts.last().expect("trace has u_0")
    }

    pub fn total_size(&self) -> usize {
        self.greedy_rows.len() + self.patch_rows.len()
    }

    /// Greedy rows followed by patch rows.
    pub fn cover_rows(&self) -> Vec<usize> {
        self.greedy_rows
            .iter()
            .chain(&self.patch_rows)
            .copied()
            .collect()
    }
}

/// Columns that are uncovered and have a 1 in `row`.
pub fn gain(inst: &Instance, row: usize, uncovered: &BitRow) -> Result<usize, GreedyError> {
    let bits = inst
        .row(row)
        .ok_or(GreedyError::IndexOutOfRange { row, m: inst.m() })?;
    if uncovered.len() != inst.n() {
        return Err(GreedyError::LengthMismatch {
            expected: inst.n(),
            found: uncovered.len(),
        });
    }
    Ok(bits.intersection_count(uncovered))
}

/// The row with the largest gain; ties go to the lowest index.
pub fn greedy_step(inst: &Instance, uncovered: &BitRow) -> Result<usize, GreedyError> {
    let mut best: Option<(usize, usize)> = None;
    for row in 0..inst.m() {
        let g = gain(inst, row, uncovered)?;
        if g > 0 && best.is_none_or(|(_, bg)| g > bg) {
            best = Some((row, g));
        }
    }
    best.map(|(row, _)| row).ok_or(GreedyError::NoProgress)
}

/// Runs greedy until every column is covered or `k_max` steps were taken.
pub fn run_greedy(inst: &Instance, k_max: Option<usize>) -> CoverTrace {
    let mut uncovered = BitRow::ones(inst.n());
    let mut greedy_rows = Vec::new();
    let mut uncovered_counts = alloc::vec![inst.n()];
    let limit = k_max.unwrap_or(usize::MAX);
    let mut left = inst.n();
    while left > 0 && greedy_rows.len() < limit {
        let row = greedy_step(inst, &uncovered)
            .expect("a valid instance always has a row covering an uncovered column");
        uncovered.difference_with(&inst.rows()[row]);
        left = uncovered.count_ones();
        greedy_rows.push(row);
        uncovered_counts.push(left);
    }
    CoverTrace {
        greedy_rows,
        uncovered_counts,
        patch_rows: Vec::new(),
    }
}

/// Columns not covered by `rows`.
pub fn uncovered_after(inst: &Instance, rows: &[usize]) -> BitRow {
    let mut uncovered = BitRow::ones(inst.n());
    for &row in rows {
        uncovered.difference_with(&inst.rows()[row]);
    }
    uncovered
}

/// Patch phase: for each still-uncovered column in ascending order, adds the
/// lowest-index unselected row with a 1 there. Each added row covers
/// everything it can, so later columns may already be done.
pub fn complete_cover(inst: &Instance, trace: &CoverTrace) -> Result<CoverTrace, GreedyError> {
    let mut selected = alloc::vec![false; inst.m()];
    for &row in trace.greedy_rows.iter().chain(&trace.patch_rows) {
        if row >= inst.m() {
            return Err(GreedyError::IndexOutOfRange { row, m: inst.m() });
        }
        selected[row] = true;
    }
    let mut uncovered = uncovered_after(inst, &trace.cover_rows());
    let mut patched = trace.clone();
    for column in 0..inst.n() {
        if !uncovered.get(column) {
            continue;
        }
        let row = (0..inst.m())
            .find(|&r| !selected[r] && inst.rows()[r].get(column))
            .ok_or(GreedyError::Uncoverable { column })?;
        selected[row] = true;
        uncovered.difference_with(&inst.rows()[row]);
        patched.patch_rows.push(row);
    }
    Ok(patched)
}

/// Whether the union of `rows` is all ones. Out-of-range indices give `false`.
pub fn verify_cover(inst: &Instance, rows: &[usize]) -> bool {
    if rows.iter().any(|&r| r >= inst.m()) {
        return false;
    }
    uncovered_after(inst, rows).none()
}
