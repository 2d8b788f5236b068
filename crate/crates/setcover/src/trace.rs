//! JSON documents: cover traces and oracle reports.

use serde::{Deserialize, Serialize};
use setcover_core::oracle::{OracleReport, SandwichReport};
use setcover_core::{CoverTrace, Instance};

use crate::text::write_instance;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub m: usize,
    pub n: usize,
    pub gamma_effective: f64,
    pub greedy_rows: Vec<usize>,
    pub uncovered_counts: Vec<usize>,
    pub patch_rows: Vec<usize>,
    pub total_size: usize,
}

impl TraceDocument {
    pub fn new(inst: &Instance, trace: &CoverTrace) -> Self {
        TraceDocument {
            m: inst.m(),
            n: inst.n(),
            gamma_effective: inst.density().gamma_effective,
            greedy_rows: trace.greedy_rows.clone(),
            uncovered_counts: trace.uncovered_counts.clone(),
            patch_rows: trace.patch_rows.clone(),
            total_size: trace.total_size(),
        }
    }

    pub fn trace(&self) -> CoverTrace {
        CoverTrace {
            greedy_rows: self.greedy_rows.clone(),
            uncovered_counts: self.uncovered_counts.clone(),
            patch_rows: self.patch_rows.clone(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ViolationDocument {
    pub kind: String,
    pub k: usize,
    pub u_k: usize,
    pub bound: f64,
    /// The offending instance in the text format.
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub suite: String,
    pub pass: bool,
    pub checked: usize,
    pub violations: Vec<ViolationDocument>,
}

impl ReportDocument {
    pub fn from_oracle(suite: &str, report: &OracleReport) -> Self {
        ReportDocument {
            suite: suite.to_owned(),
            pass: report.pass(),
            checked: report.instances_checked,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationDocument {
                    kind: v.kind.name().to_owned(),
                    k: v.k,
                    u_k: v.u_k,
                    bound: v.bound,
                    instance: write_instance(&v.instance),
                })
                .collect(),
        }
    }

    pub fn from_sandwich(report: &SandwichReport) -> Self {
        ReportDocument {
            suite: "product-inequality".to_owned(),
            pass: report.pass(),
            checked: report.pairs_checked,
            violations: report
                .failures
                .iter()
                .map(|f| ViolationDocument {
                    kind: format!(
                        "sandwich x={} y={} lower={} exact={} upper={}",
                        f.x, f.y, f.lower, f.exact, f.upper
                    ),
                    k: f.x,
                    u_k: f.y,
                    bound: f.exact,
                    instance: String::new(),
                })
                .collect(),
        }
    }
}
