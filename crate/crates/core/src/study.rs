//! Monte Carlo simulation study: average estimate, mean squared error and a
//! parametric bootstrap interval per parameter, for each sample size.

use crate::bootstrap::{parametric_bootstrap, BootstrapSpec};
use crate::em::{FitConfig, FitterId};
use crate::error::{Error, Result};
use crate::exec::{map_indexed, sub_seed, Execution};
use crate::params::Params7;

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub truth: Params7,
    pub sizes: Vec<usize>,
    pub replications: usize,
    pub fitter: FitterId,
    pub fit: FitConfig,
    pub seed: u64,
    /// Bootstrap replicates for the interval column; `0` skips it.
    pub bootstrap_replicates: usize,
    pub gamma: f64,
    pub execution: Execution,
}

impl StudyConfig {
    pub fn new(fitter: FitterId, truth: Params7, sizes: Vec<usize>, replications: usize, seed: u64) -> Self {
        Self {
            truth,
            sizes,
            replications,
            fitter,
            fit: match fitter {
                FitterId::Ac7 => FitConfig::seven_param(),
                _ => FitConfig::default(),
            },
            seed,
            bootstrap_replicates: 0,
            gamma: 0.05,
            execution: Execution::default(),
        }
    }

    fn validate(&self) -> Result<()> {
        self.truth.validate()?;
        self.fit.validate()?;
        if self.replications == 0 {
            return Err(Error::Domain("replications must be at least 1".into()));
        }
        if self.sizes.is_empty() || self.sizes.iter().any(|&n| n < 2) {
            return Err(Error::Domain("sample sizes must be at least 2".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyRow {
    pub n: usize,
    /// Replicates that returned an estimate (capped fits included).
    pub fitted: usize,
    /// Replicates whose simulation or fit returned an error.
    pub errors: usize,
    pub capped: usize,
    pub ae: Vec<f64>,
    pub mse: Vec<f64>,
    pub ci: Option<Vec<(f64, f64)>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyTable {
    pub fitter: FitterId,
    pub names: &'static [&'static str],
    pub truth: Vec<f64>,
    pub rows: Vec<StudyRow>,
}

/// Seed for sample size `n`; replicate `r` then uses `sub_seed(size_seed, r)`.
pub fn size_seed(seed: u64, n: usize) -> u64 {
    sub_seed(seed, n as u64 ^ 0x5eed_0000_0000_0000)
}

/// Runs the study. Capped fits enter the averages; fits that error are
/// counted and skipped. The interval column is a parametric bootstrap
/// around the average estimate.
pub fn run_study(config: &StudyConfig) -> Result<StudyTable> {
    config.validate()?;
    let fitter = config.fitter;
    let truth = fitter.project(&config.truth);
    let mut rows = Vec::with_capacity(config.sizes.len());

    for &n in &config.sizes {
        let seed_n = size_seed(config.seed, n);
        let fits = map_indexed(config.replications, config.execution, |r| {
            let data = fitter.simulate(n, &config.truth, sub_seed(seed_n, r as u64))?;
            fitter.fit(&data, &config.fit)
        });
        let ok: Vec<_> = fits.iter().filter_map(|f| f.as_ref().ok()).collect();
        let errors = fits.len() - ok.len();
        if ok.is_empty() {
            return Err(Error::DegenerateData(format!(
                "every replicate at n = {n} failed"
            )));
        }
        let capped = ok.iter().filter(|r| r.capped).count();
        let estimates: Vec<Vec<f64>> = ok.iter().map(|r| fitter.project(&r.estimate)).collect();
        let m = estimates.len() as f64;
        let ae: Vec<f64> = (0..truth.len())
            .map(|k| estimates.iter().map(|e| e[k]).sum::<f64>() / m)
            .collect();
        let mse: Vec<f64> = (0..truth.len())
            .map(|k| estimates.iter().map(|e| (e[k] - truth[k]).powi(2)).sum::<f64>() / m)
            .collect();

        let ci = if config.bootstrap_replicates > 0 {
            let centre = centre_params(fitter, &config.truth, &ae)?;
            let spec = BootstrapSpec {
                n,
                replicates: config.bootstrap_replicates,
                fitter,
                fit: config.fit,
                gamma: config.gamma,
                seed: sub_seed(seed_n, u64::MAX),
                execution: config.execution,
            };
            let report = parametric_bootstrap(&centre, &spec)?;
            Some(report.params.iter().map(|p| (p.lower, p.upper)).collect())
        } else {
            None
        };

        rows.push(StudyRow {
            n,
            fitted: ok.len(),
            errors,
            capped,
            ae,
            mse,
            ci,
        });
    }
    Ok(StudyTable {
        fitter,
        names: fitter.param_names(),
        truth,
        rows,
    })
}

fn centre_params(fitter: FitterId, truth: &Params7, ae: &[f64]) -> Result<Params7> {
    match fitter {
        FitterId::Ac7 => Params7::from_slice(ae),
        _ => Params7::new(truth.mu1, truth.mu2, truth.sigma1, truth.sigma2, ae[0], ae[1], ae[2])
            .map(|p| Params7::standard(p.alphas())),
    }
}

impl StudyTable {
    /// One row per sample size: `n,fitted,errors,capped`, then
    /// `<name>_ae,<name>_mse,<name>_ci_lo,<name>_ci_hi` per parameter.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,fitted,errors,capped");
        for name in self.names {
            out.push_str(&format!(",{name}_ae,{name}_mse,{name}_ci_lo,{name}_ci_hi"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{},{},{},{}", row.n, row.fitted, row.errors, row.capped));
            for k in 0..self.names.len() {
                let (lo, hi) = row
                    .ci
                    .as_ref()
                    .map_or((f64::NAN, f64::NAN), |ci| ci[k]);
                out.push_str(&format!(",{},{},{},{}", row.ae[k], row.mse[k], lo, hi));
            }
            out.push('\n');
        }
        out
    }
}
