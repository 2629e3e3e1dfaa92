//! Parametric bootstrap: resample from a fitted model, refit, and summarize
//! the spread of the refitted estimates.

use crate::em::{FitConfig, FitterId};
use crate::error::{Error, Result};
use crate::exec::{map_indexed, sub_seed, Execution};
use crate::params::Params7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BootstrapSpec {
    /// Size of each simulated sample.
    pub n: usize,
    pub replicates: usize,
    pub fitter: FitterId,
    pub fit: FitConfig,
    /// Interval level is `1 - gamma`.
    pub gamma: f64,
    pub seed: u64,
    pub execution: Execution,
}

impl BootstrapSpec {
    pub fn new(fitter: FitterId, n: usize, replicates: usize, seed: u64) -> Self {
        Self {
            n,
            replicates,
            fitter,
            fit: match fitter {
                FitterId::Ac7 => FitConfig::seven_param(),
                _ => FitConfig::default(),
            },
            gamma: 0.05,
            seed,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSummary {
    pub name: &'static str,
    /// The value the samples were drawn from.
    pub point: f64,
    pub mean: f64,
    /// Mean squared deviation of the refits from `point`.
    pub mse: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BootstrapReport {
    pub replicates: usize,
    pub failure_count: usize,
    pub params: Vec<ParamSummary>,
}

impl BootstrapReport {
    pub fn successes(&self) -> usize {
        self.replicates - self.failure_count
    }

    pub fn get(&self, name: &str) -> Option<&ParamSummary> {
        self.params.iter().find(|p| p.name == name)
    }
}

/// Value at nearest rank `ceil(p * n)` (clamped to `1..=n`) of sorted data.
pub fn nearest_rank(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    // guard against p * n landing a hair above an integer
    let rank = ((p * n as f64) - 1e-9).ceil() as usize;
    sorted[rank.clamp(1, n) - 1]
}

/// Nearest-rank percentiles at `gamma/2` and `1 - gamma/2`.
pub fn percentile_interval(values: &[f64], gamma: f64) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::Domain("percentile interval of an empty list".into()));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::Domain(format!("gamma {gamma} outside (0, 1)")));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok((
        nearest_rank(&sorted, gamma / 2.0),
        nearest_rank(&sorted, 1.0 - gamma / 2.0),
    ))
}

/// Replicate `b` draws its sample with seed [`sub_seed`]`(spec.seed, b)`, so
/// the report does not depend on the execution strategy. A replicate that
/// errors or does not converge counts as a failure and is left out of the
/// summaries.
pub fn parametric_bootstrap(params_hat: &Params7, spec: &BootstrapSpec) -> Result<BootstrapReport> {
    params_hat.validate()?;
    spec.fit.validate()?;
    if spec.replicates == 0 {
        return Err(Error::Domain("bootstrap needs at least one replicate".into()));
    }
    if spec.n == 0 {
        return Err(Error::Domain("bootstrap sample size must be at least 1".into()));
    }
    if !(spec.gamma > 0.0 && spec.gamma < 1.0) {
        return Err(Error::Domain(format!("gamma {} outside (0, 1)", spec.gamma)));
    }

    let fitter = spec.fitter;
    let estimates: Vec<Option<Vec<f64>>> = map_indexed(spec.replicates, spec.execution, |b| {
        let data = fitter
            .simulate(spec.n, params_hat, sub_seed(spec.seed, b as u64))
            .ok()?;
        let report = fitter.fit(&data, &spec.fit).ok()?;
        report.converged.then(|| fitter.project(&report.estimate))
    });

    let ok: Vec<Vec<f64>> = estimates.into_iter().flatten().collect();
    if ok.is_empty() {
        return Err(Error::BootstrapFailure {
            replicates: spec.replicates,
        });
    }
    let truth = fitter.project(params_hat);
    let params = fitter
        .param_names()
        .iter()
        .enumerate()
        .map(|(k, &name)| {
            let column: Vec<f64> = ok.iter().map(|e| e[k]).collect();
            summarize(name, truth[k], &column, spec.gamma)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BootstrapReport {
        replicates: spec.replicates,
        failure_count: spec.replicates - ok.len(),
        params,
    })
}

pub(crate) fn summarize(name: &'static str, point: f64, values: &[f64], gamma: f64) -> Result<ParamSummary> {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let mse = values.iter().map(|v| (v - point).powi(2)).sum::<f64>() / n;
    let (lower, upper) = percentile_interval(values, gamma)?;
    Ok(ParamSummary {
        name,
        point,
        mean,
        mse,
        lower,
        upper,
    })
}
