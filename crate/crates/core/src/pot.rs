//! Peaks over threshold: keep pairs where both coordinates exceed their
//! thresholds and rescale each coordinate to `x / x0`.

use crate::bootstrap::nearest_rank;
use crate::error::{Error, Result};
use crate::sample::BivariateSample;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold {
    /// Empirical nearest-rank quantile of the column, level in `(0, 1)`.
    Quantile(f64),
    Absolute(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JointRule {
    #[default]
    BothExceed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotConfig {
    pub first: Threshold,
    pub second: Threshold,
    pub joint_rule: JointRule,
}

impl PotConfig {
    pub fn quantiles(q1: f64, q2: f64) -> Self {
        Self {
            first: Threshold::Quantile(q1),
            second: Threshold::Quantile(q2),
            joint_rule: JointRule::BothExceed,
        }
    }

    pub fn absolute(x0_1: f64, x0_2: f64) -> Self {
        Self {
            first: Threshold::Absolute(x0_1),
            second: Threshold::Absolute(x0_2),
            joint_rule: JointRule::BothExceed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotResult {
    pub sample: BivariateSample,
    pub x0_1: f64,
    pub x0_2: f64,
    pub retained: usize,
}

/// Nearest-rank empirical quantile, `x_(ceil(q n))`.
pub fn empirical_quantile(values: &[f64], q: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::Domain("quantile of an empty column".into()));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("quantile level {q} outside (0, 1)")));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(nearest_rank(&sorted, q))
}

fn resolve(threshold: Threshold, column: &[f64]) -> Result<f64> {
    let x0 = match threshold {
        Threshold::Quantile(q) => empirical_quantile(column, q)?,
        Threshold::Absolute(x0) => x0,
    };
    if !(x0 > 0.0 && x0.is_finite()) {
        return Err(Error::Domain(format!("threshold {x0} must be positive")));
    }
    Ok(x0)
}

pub fn pot_transform(raw: &BivariateSample, config: &PotConfig) -> Result<PotResult> {
    let x0_1 = resolve(config.first, &raw.first().collect::<Vec<_>>())?;
    let x0_2 = resolve(config.second, &raw.second().collect::<Vec<_>>())?;
    let rows: Vec<(f64, f64)> = match config.joint_rule {
        JointRule::BothExceed => raw
            .rows()
            .iter()
            .filter(|&&(a, b)| a > x0_1 && b > x0_2)
            .map(|&(a, b)| (a / x0_1, b / x0_2))
            .collect(),
    };
    if rows.is_empty() {
        return Err(Error::EmptyResult);
    }
    let retained = rows.len();
    Ok(PotResult {
        sample: BivariateSample::new(rows)?,
        x0_1,
        x0_2,
        retained,
    })
}
