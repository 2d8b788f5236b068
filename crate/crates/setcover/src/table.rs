//! CSV output. Floats use Rust's shortest round-trip `Display` form, so `1.0`
//! is written as `1`.

use std::fmt::Write as _;

use setcover_core::bounds::{BoundSeries, CoverSizeBound};
use setcover_core::greedy::run_greedy;
use setcover_core::{Instance, BOUND_SLACK};

pub const BOUNDS_HEADER: &str = "k,classical,improved,ratio";

pub fn bounds_csv(series: &BoundSeries) -> String {
    let mut out = String::from(BOUNDS_HEADER);
    out.push('\n');
    for e in &series.entries {
        writeln!(out, "{},{},{},{}", e.k, e.classical, e.improved, e.ratio).unwrap();
    }
    out
}

/// `# cover_size_bound improved=(k*,S) classical=(k*,S)`
pub fn cover_size_trailer(improved: CoverSizeBound, classical: CoverSizeBound) -> String {
    format!(
        "# cover_size_bound improved=({},{}) classical=({},{})\n",
        improved.k_star, improved.size_bound, classical.k_star, classical.size_bound
    )
}

pub const RECORD_HEADER: &str =
    "instance,m,n,gamma_nominal,gamma_effective,seed,model,k,u_k,delta_k,classical,improved,ratio";

/// One greedy step of one instance next to both bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub instance: usize,
    pub m: usize,
    pub n: usize,
    pub gamma_nominal: f64,
    pub gamma_effective: f64,
    /// `None` for instances read from a file.
    pub seed: Option<u64>,
    pub model: String,
    pub k: usize,
    pub u_k: usize,
    pub delta_k: f64,
    pub classical: f64,
    pub improved: f64,
    pub ratio: f64,
}

impl ExperimentRecord {
    /// `delta_k <= improved <= classical`, with the slack applied to
    /// `u_k <= n * improved`.
    pub fn within_bounds(&self) -> bool {
        self.u_k as f64 <= self.n as f64 * self.improved + BOUND_SLACK
            && self.improved <= self.classical + BOUND_SLACK
    }

    pub fn csv_line(&self) -> String {
        let seed = self.seed.map(|s| s.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.m,
            self.n,
            self.gamma_nominal,
            self.gamma_effective,
            seed,
            self.model,
            self.k,
            self.u_k,
            self.delta_k,
            self.classical,
            self.improved,
            self.ratio
        )
    }
}

/// Runs greedy to completion and emits one record per step `k = 0..=K`,
/// with bounds evaluated at the measured `gamma_effective`.
pub fn experiment_records(
    instance: usize,
    inst: &Instance,
    gamma_nominal: Option<f64>,
    seed: Option<u64>,
    model: &str,
) -> Vec<ExperimentRecord> {
    let density = inst.density();
    let trace = run_greedy(inst, None);
    let series = BoundSeries::new(density.gamma_effective, inst.m(), trace.steps())
        .expect("gamma_effective is in (0, 1] and greedy takes at most m steps");
    trace
        .uncovered_counts
        .iter()
        .zip(&series.entries)
        .map(|(&u_k, e)| ExperimentRecord {
            instance,
            m: inst.m(),
            n: inst.n(),
            gamma_nominal: gamma_nominal.unwrap_or(density.gamma_effective),
            gamma_effective: density.gamma_effective,
            seed,
            model: model.to_owned(),
            k: e.k,
            u_k,
            delta_k: u_k as f64 / inst.n() as f64,
            classical: e.classical,
            improved: e.improved,
            ratio: e.ratio,
        })
        .collect()
}

pub fn records_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(RECORD_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}
