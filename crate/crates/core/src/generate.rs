//! Seeded instance generators that meet a minimum column density.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bitrow::BitRow;
use crate::instance::{column_quota, Instance};
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// Every column gets exactly `ceil(gamma * m)` ones at uniformly chosen rows.
    ColumnRegular,
    /// Independent cells with probability `p`, then deficient columns are
    /// topped up to `ceil(gamma * m)` ones.
    BernoulliRepair,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::ColumnRegular => "column-regular",
            Model::BernoulliRepair => "bernoulli-repair",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "column-regular" => Ok(Model::ColumnRegular),
            "bernoulli-repair" => Ok(Model::BernoulliRepair),
            _ => Err(GenError::UnknownModel),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenError {
    BadSpec(&'static str),
    WrongModel { expected: Model, found: Model },
    UnknownModel,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::BadSpec(why) => write!(f, "bad generator spec: {why}"),
            GenError::WrongModel { expected, found } => {
                write!(f, "generator for {expected} called with a {found} spec")
            }
            GenError::UnknownModel => {
                write!(
                    f,
                    "unknown model (expected column-regular or bernoulli-repair)"
                )
            }
        }
    }
}

impl core::error::Error for GenError {}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub m: usize,
    pub n: usize,
    pub gamma: f64,
    pub model: Model,
    /// Cell probability; only read by [`Model::BernoulliRepair`].
    pub p: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn column_regular(m: usize, n: usize, gamma: f64, seed: u64) -> Self {
        GenSpec {
            m,
            n,
            gamma,
            model: Model::ColumnRegular,
            p: 0.0,
            seed,
        }
    }

    pub fn bernoulli_repair(m: usize, n: usize, gamma: f64, p: f64, seed: u64) -> Self {
        GenSpec {
            m,
            n,
            gamma,
            model: Model::BernoulliRepair,
            p,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.m == 0 {
            return Err(GenError::BadSpec("m must be positive"));
        }
        if self.n == 0 {
            return Err(GenError::BadSpec("n must be positive"));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(GenError::BadSpec("gamma must lie in (0, 1]"));
        }
        if self.model == Model::BernoulliRepair && !(0.0..=1.0).contains(&self.p) {
            return Err(GenError::BadSpec("p must lie in [0, 1]"));
        }
        Ok(())
    }

    /// Ones required per column, `ceil(gamma * m)`.
    pub fn quota(&self) -> usize {
        column_quota(self.gamma, self.m)
    }
}

/// Dispatches on `spec.model`.
pub fn generate(spec: &GenSpec) -> Result<Instance, GenError> {
    match spec.model {
        Model::ColumnRegular => gen_column_regular(spec),
        Model::BernoulliRepair => gen_bernoulli_repair(spec),
    }
}

pub fn gen_column_regular(spec: &GenSpec) -> Result<Instance, GenError> {
    check_model(spec, Model::ColumnRegular)?;
    let c = spec.quota();
    let mut rng = SplitMix64::new(spec.seed);
    let mut rows = alloc::vec![BitRow::zeros(spec.n); spec.m];
    let mut order: Vec<usize> = (0..spec.m).collect();
    for column in 0..spec.n {
        for &row in rng.choose_prefix(&mut order, c) {
            rows[row].set(column, true);
        }
    }
    Ok(Instance::new(rows).expect("every column has c >= 1 ones"))
}

pub fn gen_bernoulli_repair(spec: &GenSpec) -> Result<Instance, GenError> {
    check_model(spec, Model::BernoulliRepair)?;
    let c = spec.quota();
    let mut rng = SplitMix64::new(spec.seed);
    let mut rows = alloc::vec![BitRow::zeros(spec.n); spec.m];
    for row in rows.iter_mut() {
        for column in 0..spec.n {
            if rng.next_f64() < spec.p {
                row.set(column, true);
            }
        }
    }
    // Repair only adds ones.
    let mut zero_rows = Vec::with_capacity(spec.m);
    for column in 0..spec.n {
        zero_rows.clear();
        zero_rows.extend((0..spec.m).filter(|&r| !rows[r].get(column)));
        let have = spec.m - zero_rows.len();
        if have < c {
            for &row in rng.choose_prefix(&mut zero_rows, c - have) {
                rows[row].set(column, true);
            }
        }
    }
    Ok(Instance::new(rows).expect("every column has c >= 1 ones"))
}

fn check_model(spec: &GenSpec, expected: Model) -> Result<(), GenError> {
    spec.validate()?;
    if spec.model != expected {
        return Err(GenError::WrongModel {
            expected,
            found: spec.model,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_regular_quarter_density_is_one_per_column() {
        let inst = gen_column_regular(&GenSpec::column_regular(4, 8, 0.25, 7)).unwrap();
        assert!(inst.column_counts().iter().all(|&c| c == 1));
    }

    #[test]
    fn column_regular_rounds_quota_up() {
        let inst = gen_column_regular(&GenSpec::column_regular(5, 20, 0.5, 42)).unwrap();
        assert!(inst.column_counts().iter().all(|&c| c == 3));
        assert_eq!(inst.density().c_effective, 3);
    }

    #[test]
    fn generators_are_deterministic() {
        let a = GenSpec::column_regular(9, 33, 0.3, 5);
        assert_eq!(generate(&a).unwrap(), generate(&a).unwrap());
        let b = GenSpec::bernoulli_repair(9, 33, 0.3, 0.4, 5);
        assert_eq!(generate(&b).unwrap(), generate(&b).unwrap());
        let c = GenSpec {
            seed: 6,
            ..a.clone()
        };
        assert_ne!(generate(&a).unwrap(), generate(&c).unwrap());
    }

    #[test]
    fn bernoulli_extremes() {
        let full = gen_bernoulli_repair(&GenSpec::bernoulli_repair(5, 7, 0.2, 1.0, 1)).unwrap();
        assert_eq!(full, Instance::all_ones(5, 7).unwrap());
        assert_eq!(full.density().c_effective, 5);

        let repaired = gen_bernoulli_repair(&GenSpec::bernoulli_repair(6, 9, 0.5, 0.0, 1)).unwrap();
        assert!(repaired.column_counts().iter().all(|&c| c == 3));
    }

    #[test]
    fn bernoulli_meets_density() {
        let spec = GenSpec::bernoulli_repair(6, 10, 1.0 / 3.0, 0.2, 17);
        let inst = gen_bernoulli_repair(&spec).unwrap();
        assert!(inst.column_counts().iter().all(|&c| c >= 2));
    }

    #[test]
    fn rejects_bad_specs() {
        let ok = GenSpec::column_regular(4, 4, 0.5, 0);
        for bad in [
            GenSpec { m: 0, ..ok.clone() },
            GenSpec { n: 0, ..ok.clone() },
            GenSpec {
                gamma: 0.0,
                ..ok.clone()
            },
            GenSpec {
                gamma: 1.5,
                ..ok.clone()
            },
            GenSpec {
                gamma: f64::NAN,
                ..ok.clone()
            },
        ] {
            assert!(
                matches!(generate(&bad), Err(GenError::BadSpec(_))),
                "{bad:?}"
            );
        }
        let bad_p = GenSpec::bernoulli_repair(4, 4, 0.5, 1.2, 0);
        assert!(matches!(generate(&bad_p), Err(GenError::BadSpec(_))));
        assert!(matches!(
            gen_bernoulli_repair(&ok),
            Err(GenError::WrongModel { .. })
        ));
    }

    #[test]
    fn model_names_round_trip() {
        for model in [Model::ColumnRegular, Model::BernoulliRepair] {
            assert_eq!(model.name().parse::<Model>(), Ok(model));
        }
        assert_eq!("other".parse::<Model>(), Err(GenError::UnknownModel));
    }
}
