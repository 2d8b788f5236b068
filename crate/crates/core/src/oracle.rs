//! Brute-force ground truth: exact minimum covers for small instances, and
//! exhaustive or randomized checks of greedy traces against both bounds.

use alloc::vec::Vec;
use core::fmt;

use crate::bitrow::BitRow;
use crate::bounds::BoundSeries;
use crate::generate::{generate, GenError, GenSpec, Model};
use crate::greedy::run_greedy;
use crate::instance::Instance;
use crate::rng::{derive_seed, SplitMix64};
use crate::BOUND_SLACK;

/// Row limit for [`exact_min_cover`].
pub const EXACT_MAX_ROWS: usize = 25;
/// Cell limit (`m * n`) for [`check_bound_exhaustive`].
pub const EXHAUSTIVE_MAX_CELLS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    BadArgs(&'static str),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { what, size, limit } => {
                write!(f, "{what} = {size} exceeds the brute-force limit {limit}")
            }
            OracleError::BadArgs(why) => write!(f, "bad arguments: {why}"),
        }
    }
}

impl core::error::Error for OracleError {}

/// A smallest cover; among covers of that size, the lexicographically
/// smallest row set.
pub fn exact_min_cover(inst: &Instance) -> Result<(usize, Vec<usize>), OracleError> {
    if inst.m() > EXACT_MAX_ROWS {
        return Err(OracleError::TooLarge {
            what: "m",
            size: inst.m(),
            limit: EXACT_MAX_ROWS,
        });
    }
    let m = inst.m();
    // suffix[i] = union of rows i..m
    let mut suffix = alloc::vec![BitRow::zeros(inst.n()); m + 1];
    for i in (0..m).rev() {
        let mut u = suffix[i + 1].clone();
        u.union_with(&inst.rows()[i]);
        suffix[i] = u;
    }
    let widest = inst
        .rows()
        .iter()
        .map(BitRow::count_ones)
        .max()
        .unwrap_or(0);
    for size in 1..=m {
        let mut search = SubsetSearch {
            inst,
            suffix: &suffix,
            widest,
            chosen: Vec::with_capacity(size),
        };
        if search.extend(0, size, &BitRow::zeros(inst.n())) {
            return Ok((size, search.chosen));
        }
    }
    unreachable!("all rows together cover a valid instance")
}

struct SubsetSearch<'a> {
    inst: &'a Instance,
    suffix: &'a [BitRow],
    widest: usize,
    chosen: Vec<usize>,
}

impl SubsetSearch<'_> {
    /// Tries to add `left` more rows from `start..` to reach a cover, in
    /// lexicographic order of index sets.
    fn extend(&mut self, start: usize, left: usize, covered: &BitRow) -> bool {
        let n = self.inst.n();
        let missing = n - covered.count_ones();
        if missing == 0 {
            return left == 0 || self.pad(start, left);
        }
        if left == 0 || missing > left * self.widest {
            return false;
        }
        let mut reach = covered.clone();
        reach.union_with(&self.suffix[start]);
        if !reach.all() {
            return false;
        }
        let m = self.inst.m();
        for row in start..=(m - left) {
            let mut next = covered.clone();
            next.union_with(&self.inst.rows()[row]);
            self.chosen.push(row);
            if self.extend(row + 1, left - 1, &next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    /// Fills the remaining slots with the lowest unused indices.
    fn pad(&mut self, start: usize, left: usize) -> bool {
        if start + left > self.inst.m() {
            return false;
        }
        self.chosen.extend(start..start + left);
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `u_k > n * improved(k)`.
    Improved,
    /// `u_k > n * classical(k)`.
    Classical,
    /// Step `k` covered fewer than `ceil(c * u_k / (m - k))` columns.
    Pigeonhole,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::Improved => "improved",
            ViolationKind::Classical => "classical",
            ViolationKind::Pigeonhole => "pigeonhole",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub instance: Instance,
    pub kind: ViolationKind,
    pub k: usize,
    pub u_k: usize,
    /// `n * bound` for the trajectory kinds, the required coverage for
    /// [`ViolationKind::Pigeonhole`].
    pub bound: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleReport {
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.instances_checked += other.instances_checked;
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances checked, {} violations",
            if self.pass() { "PASS" } else { "FAIL" },
            self.instances_checked,
            self.violations.len()
        )
    }
}

/// Runs greedy to completion on `inst` and checks every step against both
/// bounds (with `gamma_effective`) and the per-step pigeonhole guarantee.
pub fn check_instance(inst: &Instance) -> Vec<Violation> {
    let density = inst.density();
    let (m, n, c) = (inst.m(), inst.n(), density.c_effective);
    let trace = run_greedy(inst, None);
    let series =
        BoundSeries::full(density.gamma_effective, m).expect("gamma_effective is in (0, 1]");
    let mut violations = Vec::new();
    let mut flag = |kind, k, u_k, bound| {
        violations.push(Violation {
            instance: inst.clone(),
            kind,
            k,
            u_k,
            bound,
        })
    };
    for (k, &u_k) in trace.uncovered_counts.iter().enumerate() {
        let entry = series.entries[k];
        let improved = n as f64 * entry.improved;
        if u_k as f64 > improved + BOUND_SLACK {
            flag(ViolationKind::Improved, k, u_k, improved);
        }
        let classical = n as f64 * entry.classical;
        if u_k as f64 > classical + BOUND_SLACK {
            flag(ViolationKind::Classical, k, u_k, classical);
        }
        if let Some(&u_next) = trace.uncovered_counts.get(k + 1) {
            let required = (c * u_k).div_ceil(m - k);
            if u_k - u_next < required {
                flag(ViolationKind::Pigeonhole, k, u_k, required as f64);
            }
        }
    }
    violations
}

/// Checks every `m x n` binary matrix without a zero column.
pub fn check_bound_exhaustive(m: usize, n: usize) -> Result<OracleReport, OracleError> {
    if m == 0 || n == 0 {
        return Err(OracleError::BadArgs("m and n must be positive"));
    }
    if m * n > EXHAUSTIVE_MAX_CELLS {
        return Err(OracleError::TooLarge {
            what: "m*n",
            size: m * n,
            limit: EXHAUSTIVE_MAX_CELLS,
        });
    }
    let mut report = OracleReport::default();
    for_each_covering_matrix(m, n, |inst| {
        report.instances_checked += 1;
        report.violations.extend(check_instance(inst));
    });
    Ok(report)
}

/// Calls `visit` on every `m x n` instance whose columns are all nonzero,
/// `(2^m - 1)^n` of them. Column masks advance like an odometer, column 0
/// fastest.
pub fn for_each_covering_matrix(m: usize, n: usize, mut visit: impl FnMut(&Instance)) {
    assert!(m < usize::BITS as usize, "m too large to enumerate");
    let top = (1usize << m) - 1;
    let mut masks = alloc::vec![1usize; n];
    loop {
        let rows = (0..m)
            .map(|r| BitRow::from_bools(masks.iter().map(|&mask| mask >> r & 1 == 1)))
            .collect();
        visit(&Instance::new(rows).expect("nonzero column masks"));
        let mut col = 0;
        while col < n && masks[col] == top {
            masks[col] = 1;
            col += 1;
        }
        if col == n {
            break;
        }
        masks[col] += 1;
    }
}

/// Generates each spec and checks the resulting instance like
/// [`check_bound_exhaustive`] does.
pub fn check_bound_random(specs: &[GenSpec]) -> Result<OracleReport, GenError> {
    let mut report = OracleReport::default();
    for spec in specs {
        let inst = generate(spec)?;
        report.instances_checked += 1;
        report.violations.extend(check_instance(&inst));
    }
    Ok(report)
}

pub const SCHEDULE_GAMMAS: [f64; 4] = [0.1, 0.2, 0.3, 0.5];
const SCHEDULE_PS: [f64; 4] = [0.0, 0.1, 0.25, 0.5];

/// A reproducible mix of generator specs: models alternate, gammas cycle
/// through [`SCHEDULE_GAMMAS`], and `m in 1..=max_m`, `n in 1..=max_n` and
/// the Bernoulli `p` are drawn from a stream seeded by `(seed, i)`.
pub fn random_schedule(count: usize, seed: u64, max_m: usize, max_n: usize) -> Vec<GenSpec> {
    assert!(
        max_m > 0 && max_n > 0,
        "schedule needs positive size limits"
    );
    (0..count)
        .map(|i| {
            let mut rng = SplitMix64::new(derive_seed(seed, i as u64));
            let gamma = SCHEDULE_GAMMAS[(i / 2) % SCHEDULE_GAMMAS.len()];
            let m = 1 + rng.below(max_m as u64) as usize;
            let n = 1 + rng.below(max_n as u64) as usize;
            let p = SCHEDULE_PS[rng.below(SCHEDULE_PS.len() as u64) as usize];
            let model = if i % 2 == 0 {
                Model::ColumnRegular
            } else {
                Model::BernoulliRepair
            };
            GenSpec {
                m,
                n,
                gamma,
                model,
                p,
                seed: rng.next_u64(),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SandwichFailure {
    pub x: usize,
    pub y: usize,
    pub lower: f64,
    pub exact: f64,
    pub upper: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SandwichReport {
    pub pairs_checked: usize,
    pub failures: Vec<SandwichFailure>,
}

impl SandwichReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SandwichReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} pairs checked, {} violations",
            if self.pass() { "PASS" } else { "FAIL" },
            self.pairs_checked,
            self.failures.len()
        )
    }
}

/// Relative slack for the product sandwich at its equality points.
pub const SANDWICH_REL_SLACK: f64 = 1e-12;

/// Checks `lower <= exact <= upper` for every `1 <= x <= y <= max_y`.
pub fn check_product_sandwich(max_y: usize) -> SandwichReport {
    use crate::bounds::{product_exact, product_lower, product_upper};
    let mut report = SandwichReport::default();
    for y in 1..=max_y {
        for x in 1..=y {
            let lower = product_lower(x, y).expect("x <= y");
            let exact = product_exact(x, y).expect("x <= y");
            let upper = product_upper(x, y).expect("x <= y");
            report.pairs_checked += 1;
            let ok = lower <= exact * (1.0 + SANDWICH_REL_SLACK)
                && exact <= upper * (1.0 + SANDWICH_REL_SLACK);
            if !ok {
                report.failures.push(SandwichFailure {
                    x,
                    y,
                    lower,
                    exact,
                    upper,
                });
            }
        }
    }
    report
}
