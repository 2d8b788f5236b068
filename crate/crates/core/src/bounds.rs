//! Upper bounds on the uncovered fraction `delta_k = u_k / n` after `k`
//! greedy steps on an `m`-row instance whose columns each hold at least
//! `gamma * m` ones.
//!
//! * classical: `delta_k <= (1 - gamma)^k`.
//! * improved: `delta_{k+1} <= delta_k * (1 - gamma*m / (m - k))`. After `k`
//!   steps the ones of every uncovered column sit in the `m - k` unselected
//!   rows, so one of those rows covers at least `gamma*m*u_k / (m - k)` of
//!   them.
//!
//! Unrolling the improved recurrence from `delta_0 = 1` gives
//!
//! ```text
//! delta_k <= (1 - gamma)^k * prod_{i=1}^{k-1} (1 - i/(m(1-gamma))) / (1 - i/m)
//! ```
//!
//! for `k <= m(1 - gamma)`. The exponent and the product's upper limit both
//! follow from `k` counting the steps already taken; the `i = 0` factor is
//! the leading `(1 - gamma)`. [`closed_form_bound`] evaluates this expression
//! independently of the recurrence in [`improved_bound`].

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::instance::snap_to_integer;

#[derive(Clone, Debug, PartialEq)]
pub enum BoundsError {
    BadGamma,
    BadArgs(&'static str),
    /// `k` exceeds `m(1 - gamma)`, where the closed form has negative factors.
    OutOfRegion {
        k: usize,
        limit: f64,
    },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::BadGamma => write!(f, "gamma must lie in (0, 1]"),
            BoundsError::BadArgs(why) => write!(f, "bad arguments: {why}"),
            BoundsError::OutOfRegion { k, limit } => {
                write!(
                    f,
                    "k = {k} is outside the closed-form region k <= m(1-gamma) = {limit}"
                )
            }
        }
    }
}

impl core::error::Error for BoundsError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Classical,
    Improved,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Classical => "classical",
            BoundKind::Improved => "improved",
        }
    }
}

impl FromStr for BoundKind {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" => Ok(BoundKind::Classical),
            "improved" => Ok(BoundKind::Improved),
            _ => Err(BoundsError::BadArgs(
                "bound kind must be classical or improved",
            )),
        }
    }
}

fn check_gamma(gamma: f64) -> Result<(), BoundsError> {
    if gamma > 0.0 && gamma <= 1.0 {
        Ok(())
    } else {
        Err(BoundsError::BadGamma)
    }
}

fn check_steps(m: usize, k: usize) -> Result<(), BoundsError> {
    if m == 0 {
        return Err(BoundsError::BadArgs("m must be positive"));
    }
    if k > m {
        return Err(BoundsError::BadArgs("k must not exceed m"));
    }
    Ok(())
}

/// `(1 - gamma)^k`.
pub fn classical_bound(gamma: f64, k: usize) -> Result<f64, BoundsError> {
    check_gamma(gamma)?;
    Ok(classical_unchecked(gamma, k))
}

fn classical_unchecked(gamma: f64, k: usize) -> f64 {
    libm::pow(1.0 - gamma, k as f64)
}

/// The improved recurrence, `b_0 = 1`, `b_{j+1} = b_j * max(0, 1 - gamma*m/(m-j))`,
/// evaluated up to `b_k`.
///
/// Once fewer than `gamma*m` rows remain unselected no column can still be
/// uncovered, so `b_k = 0` for every `k > m(1 - gamma)`; for integral
/// `gamma*m` this coincides with the clamped factor. `gamma*m` within `1e-9`
/// of an integer is taken as that integer.
pub fn improved_bound(gamma: f64, m: usize, k: usize) -> Result<f64, BoundsError> {
    check_gamma(gamma)?;
    check_steps(m, k)?;
    Ok(*improved_series(gamma, m, k).last().expect("series has b_0"))
}

/// `b_0..=b_k_max` of [`improved_bound`]. Arguments must already be valid.
fn improved_series(gamma: f64, m: usize, k_max: usize) -> Vec<f64> {
    let quota = snap_to_integer(gamma * m as f64);
    let rows = m as f64;
    let mut series = Vec::with_capacity(k_max + 1);
    let mut b = 1.0;
    series.push(b);
    for j in 0..k_max {
        let next = j + 1;
        let remaining = (m - j) as f64;
        let factor = ((remaining - quota) / remaining).max(0.0);
        b = if (next as f64) > rows - quota {
            0.0
        } else {
            // Mathematically factor <= 1 - gamma; the min keeps that true
            // after rounding so the two bounds stay ordered.
            (b * factor).min(classical_unchecked(gamma, next))
        };
        series.push(b);
    }
    series
}

/// Largest `k` for which every closed-form factor is nonnegative, `m(1 - gamma)`.
pub fn closed_form_limit(gamma: f64, m: usize) -> f64 {
    m as f64 - snap_to_integer(gamma * m as f64)
}

/// The unrolled closed form of the improved bound, valid for `k <= m(1 - gamma)`.
pub fn closed_form_bound(gamma: f64, m: usize, k: usize) -> Result<f64, BoundsError> {
    check_gamma(gamma)?;
    check_steps(m, k)?;
    check_region(gamma, m, k)?;
    Ok(classical_unchecked(gamma, k) * coefficient(gamma, m, k))
}

/// `prod_{i=1}^{k-1} (1 - i/(m(1-gamma))) / (1 - i/m)`; caller checks the region.
fn coefficient(gamma: f64, m: usize, k: usize) -> f64 {
    let rows = m as f64;
    let span = rows * (1.0 - gamma);
    (1..k)
        .map(|i| (1.0 - i as f64 / span) / (1.0 - i as f64 / rows))
        .product()
}

fn check_region(gamma: f64, m: usize, k: usize) -> Result<(), BoundsError> {
    let limit = closed_form_limit(gamma, m);
    if k as f64 > limit {
        Err(BoundsError::OutOfRegion { k, limit })
    } else {
        Ok(())
    }
}

fn check_xy(x: usize, y: usize) -> Result<(), BoundsError> {
    if x == 0 || x > y {
        Err(BoundsError::BadArgs("need 1 <= x <= y"))
    } else {
        Ok(())
    }
}

/// `prod_{i=1}^{x-1} (1 - i/y)`.
pub fn product_exact(x: usize, y: usize) -> Result<f64, BoundsError> {
    check_xy(x, y)?;
    let yf = y as f64;
    Ok((1..x).map(|i| (y - i) as f64 / yf).product())
}

/// `(1 - x/y)^((x-1)/2)`, a lower bound for [`product_exact`].
pub fn product_lower(x: usize, y: usize) -> Result<f64, BoundsError> {
    check_xy(x, y)?;
    let base = (y - x) as f64 / y as f64;
    Ok(libm::pow(base, (x - 1) as f64 / 2.0))
}

/// `(1 - x/(2y))^(x-1)`, an upper bound for [`product_exact`].
pub fn product_upper(x: usize, y: usize) -> Result<f64, BoundsError> {
    check_xy(x, y)?;
    let base = (2 * y - x) as f64 / (2 * y) as f64;
    Ok(libm::pow(base, (x - 1) as f64))
}

/// Improved over classical bound at step `k`, in `[0, 1]`, evaluated as the
/// product coefficient of the closed form (exactly 1 for `k <= 1`).
pub fn improvement_ratio(gamma: f64, m: usize, k: usize) -> Result<f64, BoundsError> {
    check_gamma(gamma)?;
    check_steps(m, k)?;
    check_region(gamma, m, k)?;
    Ok(coefficient(gamma, m, k))
}

/// Ratio column of a [`BoundSeries`]: the coefficient inside the closed-form
/// region; past it the improved bound is 0, giving 0 (or 1 when the
/// classical bound is 0 as well).
fn series_ratio(gamma: f64, m: usize, k: usize, classical: f64) -> f64 {
    if k as f64 <= closed_form_limit(gamma, m) {
        coefficient(gamma, m, k)
    } else if classical == 0.0 {
        1.0
    } else {
        0.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundEntry {
    pub k: usize,
    pub classical: f64,
    pub improved: f64,
    pub ratio: f64,
}

/// Both bounds and their ratio for `k = 0..=k_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundSeries {
    pub gamma: f64,
    pub m: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundSeries {
    pub fn new(gamma: f64, m: usize, k_max: usize) -> Result<Self, BoundsError> {
        check_gamma(gamma)?;
        check_steps(m, k_max)?;
        let entries = improved_series(gamma, m, k_max)
            .into_iter()
            .enumerate()
            .map(|(k, improved)| {
                let classical = classical_unchecked(gamma, k);
                BoundEntry {
                    k,
                    classical,
                    improved,
                    ratio: series_ratio(gamma, m, k, classical),
                }
            })
            .collect();
        Ok(BoundSeries { gamma, m, entries })
    }

    /// The full series, `k = 0..=m`.
    pub fn full(gamma: f64, m: usize) -> Result<Self, BoundsError> {
        Self::new(gamma, m, m)
    }

    pub fn values(&self, kind: BoundKind) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(move |e| match kind {
            BoundKind::Classical => e.classical,
            BoundKind::Improved => e.improved,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverSizeBound {
    pub k_star: usize,
    pub size_bound: usize,
}

/// Best guaranteed size of a greedy-then-patch cover: the minimum over
/// `0 <= k <= m` of `k + ceil(n * B(k))`, with the smallest minimizing `k`.
pub fn cover_size_bound(
    gamma: f64,
    m: usize,
    n: usize,
    kind: BoundKind,
) -> Result<CoverSizeBound, BoundsError> {
    let series = BoundSeries::full(gamma, m)?;
    let best = series
        .values(kind)
        .enumerate()
        .map(|(k, b)| CoverSizeBound {
            k_star: k,
            size_bound: k + libm::ceil(n as f64 * b) as usize,
        })
        .min_by_key(|c| c.size_bound)
        .expect("series has k = 0");
    Ok(best)
}
