//! The incidence-matrix model: `m` rows (subsets) over `n` columns (elements).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitrow::BitRow;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceError {
    /// No rows were given.
    NoRows,
    /// Rows have zero length.
    NoColumns,
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    ElementOutOfRange {
        row: usize,
        element: usize,
        n: usize,
    },
    /// Column (0-based) with no ones: that element cannot be covered.
    ZeroColumn { column: usize },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::NoRows => write!(f, "instance has no rows"),
            InstanceError::NoColumns => write!(f, "instance has no columns"),
            InstanceError::RowLength {
                row,
                expected,
                found,
            } => {
                write!(f, "row {row} has length {found}, expected {expected}")
            }
            InstanceError::ElementOutOfRange { row, element, n } => {
                write!(f, "row {row} names element {element}, but n = {n}")
            }
            InstanceError::ZeroColumn { column } => {
                write!(f, "column {} has no ones and cannot be covered", column + 1)
            }
        }
    }
}

impl core::error::Error for InstanceError {}

/// A validated incidence matrix. Every column has at least one 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    n: usize,
    rows: Vec<BitRow>,
}

impl Instance {
    pub fn new(rows: Vec<BitRow>) -> Result<Self, InstanceError> {
        let first = rows.first().ok_or(InstanceError::NoRows)?;
        let n = first.len();
        if n == 0 {
            return Err(InstanceError::NoColumns);
        }
        for (row, bits) in rows.iter().enumerate() {
            if bits.len() != n {
                return Err(InstanceError::RowLength {
                    row,
                    expected: n,
                    found: bits.len(),
                });
            }
        }
        let inst = Instance { n, rows };
        if let Some(column) = inst.column_counts().iter().position(|&c| c == 0) {
            return Err(InstanceError::ZeroColumn { column });
        }
        Ok(inst)
    }

    /// Builds an instance from 0-based element lists, one per row.
    pub fn from_sets<S: AsRef<[usize]>>(n: usize, sets: &[S]) -> Result<Self, InstanceError> {
        let mut rows = Vec::with_capacity(sets.len());
        for (row, set) in sets.iter().enumerate() {
            let mut bits = BitRow::zeros(n);
            for &element in set.as_ref() {
                if element >= n {
                    return Err(InstanceError::ElementOutOfRange { row, element, n });
                }
                bits.set(element, true);
            }
            rows.push(bits);
        }
        Self::new(rows)
    }

    pub fn identity(size: usize) -> Result<Self, InstanceError> {
        let sets: Vec<[usize; 1]> = (0..size).map(|i| [i]).collect();
        Self::from_sets(size, &sets)
    }

    pub fn all_ones(m: usize, n: usize) -> Result<Self, InstanceError> {
        Self::new(vec![BitRow::ones(n); m])
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Option<&BitRow> {
        self.rows.get(i)
    }

    /// Number of rows with a 1 in each column.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for row in &self.rows {
            for j in row.ones_iter() {
                counts[j] += 1;
            }
        }
        counts
    }

    /// Density measured from the data; the nominal gamma is the measured one.
    pub fn density(&self) -> DensitySpec {
        let c = self
            .column_counts()
            .into_iter()
            .min()
            .expect("instance has at least one column");
        DensitySpec::measured(c, self.m())
    }
}

/// Column density of an instance: every column has at least `c_effective` ones.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensitySpec {
    pub gamma_nominal: f64,
    pub c_effective: usize,
    pub gamma_effective: f64,
}

impl DensitySpec {
    pub fn measured(c_effective: usize, m: usize) -> Self {
        let gamma_effective = c_effective as f64 / m as f64;
        DensitySpec {
            gamma_nominal: gamma_effective,
            c_effective,
            gamma_effective,
        }
    }

    /// Replaces the nominal gamma, e.g. with the one a generator was asked for.
    pub fn with_nominal(self, gamma_nominal: f64) -> Self {
        DensitySpec {
            gamma_nominal,
            ..self
        }
    }

    /// Whether the measured minimum column count meets `ceil(gamma * m)`.
    pub fn satisfies(&self, gamma: f64, m: usize) -> bool {
        self.c_effective >= column_quota(gamma, m)
    }
}

/// Minimum ones per column implied by density `gamma` over `m` rows:
/// `ceil(gamma * m)`, at least 1.
///
/// Products within `1e-9` of an integer are treated as that integer, so
/// `0.3 * 10` is a quota of 3 and not 4.
pub fn column_quota(gamma: f64, m: usize) -> usize {
    let quota = libm::ceil(snap_to_integer(gamma * m as f64)) as usize;
    quota.max(1)
}

/// Rounds `x` to the nearest integer when it is within `1e-9` (relative, or
/// absolute below 1) of it.
pub(crate) fn snap_to_integer(x: f64) -> f64 {
    let r = libm::round(x);
    if libm::fabs(x - r) <= 1e-9 * libm::fabs(x).max(1.0) {
        r
    } else {
        x
    }
}
