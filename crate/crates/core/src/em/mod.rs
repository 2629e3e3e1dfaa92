//! EM estimation for the singular and absolutely continuous bivariate Pareto
//! models.
//!
//! | fitter | model | margins |
//! |---|---|---|
//! | [`em_singular_fit`] | singular | standard |
//! | [`em_ac3_fit`] with [`PseudoVariant::Legacy`] | continuous | standard |
//! | [`em_ac3_fit`] with [`PseudoVariant::LogModified`] | continuous | standard |
//! | [`em_ac7_fit`] | continuous | location plug-in, gradient steps on scale |
//!
//! Every fitter stops when the relative change of its pseudo log-likelihood
//! `Q` drops below `tol`, or after `max_iter` iterations.

mod continuous;
mod seven;
mod singular;
mod weights;

use std::fmt;
use std::str::FromStr;

pub use continuous::{em_ac3_fit, m_step_continuous};
pub use seven::{em_ac7_fit, marginal_sigma_grad, marginal_sigma_grad_fd};
pub use singular::{em_singular_fit, m_step_singular, pseudo_loglik_singular};
pub use weights::{posterior_weights, pseudo_stats, PosteriorWeights, PseudoStats, PseudoVariant};

use crate::error::{Error, Result};
use crate::params::{Params3, Params7, PARAM3_NAMES, PARAM7_NAMES};
use crate::sample::{BivariateSample, DataPartition, DEFAULT_TIE_TOLERANCE};
use crate::sampler::{sample_bvpa, sample_bvpac};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    pub init_alpha: Params3,
    /// Starting scales; used by the seven-parameter fitter only.
    pub init_sigma: [f64; 2],
    /// Relative change of `Q` below which the fit is declared converged.
    pub tol: f64,
    pub max_iter: usize,
    /// Gradient step on the scales (seven-parameter fitter only).
    pub step_size: f64,
    pub sigma_floor: f64,
    pub tie_tolerance: f64,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            init_alpha: Params3 {
                alpha0: 2.0,
                alpha1: 2.2,
                alpha2: 2.4,
            },
            init_sigma: [0.6, 0.7],
            tol: 1e-5,
            max_iter: 2000,
            step_size: 1e-3,
            sigma_floor: 1e-6,
            tie_tolerance: DEFAULT_TIE_TOLERANCE,
        }
    }
}

impl FitConfig {
    /// Defaults with the starting shapes used for seven-parameter fits.
    pub fn seven_param() -> Self {
        Self {
            init_alpha: Params3 {
                alpha0: 2.0,
                alpha1: 1.2,
                alpha2: 1.4,
            },
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.init_alpha.validate()?;
        for (name, v) in [
            ("tol", self.tol),
            ("step_size", self.step_size),
            ("sigma_floor", self.sigma_floor),
            ("init_sigma1", self.init_sigma[0]),
            ("init_sigma2", self.init_sigma[1]),
        ] {
            crate::error::check_positive(name, v)?;
        }
        if self.max_iter == 0 {
            return Err(Error::Domain("max_iter must be at least 1".into()));
        }
        if self.tie_tolerance.is_nan() || self.tie_tolerance < 0.0 {
            return Err(Error::InvalidParameter {
                name: "tie_tolerance",
                value: self.tie_tolerance,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitWarning {
    /// An update drove a shape parameter to zero; the fit stopped there.
    Boundary,
    /// Every row fell on one side of the line in some iteration.
    OneWedge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport<P> {
    pub estimate: P,
    /// `Q` after each iteration.
    pub q_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// The iteration cap was hit before convergence.
    pub capped: bool,
    pub warnings: Vec<FitWarning>,
}

impl<P> FitReport<P> {
    pub fn q_final(&self) -> f64 {
        self.q_trace.last().copied().unwrap_or(f64::NAN)
    }

    pub fn map<Q>(self, f: impl FnOnce(P) -> Q) -> FitReport<Q> {
        FitReport {
            estimate: f(self.estimate),
            q_trace: self.q_trace,
            iterations: self.iterations,
            converged: self.converged,
            capped: self.capped,
            warnings: self.warnings,
        }
    }
}

/// Per-group counts and `Σ ln(1 + z)` sums of standardized data.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct GroupSums {
    pub n0: f64,
    pub n1: f64,
    pub n2: f64,
    /// Over `I0`, using the first coordinate.
    pub l0: f64,
    pub l1_in_i1: f64,
    pub l2_in_i1: f64,
    pub l1_in_i2: f64,
    pub l2_in_i2: f64,
}

impl GroupSums {
    pub fn new(partition: &DataPartition, data: &BivariateSample) -> Self {
        let rows = data.rows();
        let ln1p = |i: usize, first: bool| {
            let (a, b) = rows[i];
            if first { a.ln_1p() } else { b.ln_1p() }
        };
        Self {
            n0: partition.n0() as f64,
            n1: partition.n1() as f64,
            n2: partition.n2() as f64,
            l0: partition.i0.iter().map(|&i| ln1p(i, true)).sum(),
            l1_in_i1: partition.i1.iter().map(|&i| ln1p(i, true)).sum(),
            l2_in_i1: partition.i1.iter().map(|&i| ln1p(i, false)).sum(),
            l1_in_i2: partition.i2.iter().map(|&i| ln1p(i, true)).sum(),
            l2_in_i2: partition.i2.iter().map(|&i| ln1p(i, false)).sum(),
        }
    }

    /// Complete-data objective given diagonal count and diagonal exposure.
    pub fn objective(&self, w: &PosteriorWeights, n0: f64, exposure0: f64) -> AlphaObjective {
        AlphaObjective {
            counts: [
                n0 + w.u1 * self.n1 + w.w1 * self.n2,
                self.n1 + w.w2 * self.n2,
                self.n2 + w.u2 * self.n1,
            ],
            exposures: [
                exposure0 + self.l1_in_i2 + self.l2_in_i1,
                exposure0 + self.l1_in_i1 + self.l1_in_i2,
                exposure0 + self.l2_in_i1 + self.l2_in_i2,
            ],
        }
    }
}

/// `Σ_k counts_k ln(alpha_k) - alpha_k exposures_k`, maximized in closed form
/// by `alpha_k = counts_k / exposures_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct AlphaObjective {
    pub counts: [f64; 3],
    pub exposures: [f64; 3],
}

impl AlphaObjective {
    pub fn maximize(&self) -> Result<Params3> {
        if let Some(k) = self.exposures.iter().position(|&e| e.is_nan() || e <= 0.0) {
            return Err(Error::DegenerateData(format!(
                "zero denominator in the alpha{k} update (all data at the origin?)"
            )));
        }
        Ok(Params3 {
            alpha0: self.counts[0] / self.exposures[0],
            alpha1: self.counts[1] / self.exposures[1],
            alpha2: self.counts[2] / self.exposures[2],
        })
    }

    pub fn value(&self, alpha: &Params3) -> f64 {
        alpha
            .to_array()
            .iter()
            .zip(self.counts.iter().zip(&self.exposures))
            .map(|(&a, (&c, &e))| {
                // 0 * ln 0 = 0 at the boundary
                let log_term = if c == 0.0 { 0.0 } else { c * a.ln() };
                log_term - a * e
            })
            .sum()
    }
}

pub(crate) fn on_boundary(alpha: &Params3) -> bool {
    alpha.to_array().iter().any(|&a| a.is_nan() || a <= 0.0 || a.is_infinite())
}

/// Outcome of one EM iteration.
pub(crate) struct Step {
    pub q: f64,
    pub boundary: bool,
}

pub(crate) struct Trace {
    pub q_trace: Vec<f64>,
    pub converged: bool,
    pub capped: bool,
    pub boundary: bool,
}

/// Runs `step` until the relative change of `Q` is below `tol`, the step
/// reports a boundary, or `max_iter` is reached.
pub(crate) fn iterate(config: &FitConfig, mut step: impl FnMut() -> Result<Step>) -> Result<Trace> {
    let mut q_trace = Vec::new();
    for _ in 0..config.max_iter {
        let Step { q, boundary } = step()?;
        let prev = q_trace.last().copied();
        q_trace.push(q);
        if boundary {
            return Ok(Trace {
                q_trace,
                converged: false,
                capped: false,
                boundary: true,
            });
        }
        if let Some(prev) = prev {
            if relative_change_below(prev, q, config.tol) {
                return Ok(Trace {
                    q_trace,
                    converged: true,
                    capped: false,
                    boundary: false,
                });
            }
        }
    }
    Ok(Trace {
        q_trace,
        converged: false,
        capped: true,
        boundary: false,
    })
}

/// `|q - prev| / |prev| < tol`, falling back to `|q - prev| < tol` when `prev == 0`.
pub(crate) fn relative_change_below(prev: f64, q: f64, tol: f64) -> bool {
    let delta = (q - prev).abs();
    if prev == 0.0 {
        delta < tol
    } else {
        delta < tol * prev.abs()
    }
}

/// Selects one of the four estimation procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FitterId {
    Singular,
    Ac3Legacy,
    Ac3Modified,
    Ac7,
}

impl FitterId {
    pub const ALL: [FitterId; 4] = [
        FitterId::Singular,
        FitterId::Ac3Legacy,
        FitterId::Ac3Modified,
        FitterId::Ac7,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FitterId::Singular => "singular",
            FitterId::Ac3Legacy => "ac3_legacy",
            FitterId::Ac3Modified => "ac3_modified",
            FitterId::Ac7 => "ac7",
        }
    }

    pub fn is_continuous(&self) -> bool {
        !matches!(self, FitterId::Singular)
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            FitterId::Ac7 => &PARAM7_NAMES,
            _ => &PARAM3_NAMES,
        }
    }

    /// The components of `params` this fitter estimates.
    pub fn project(&self, params: &Params7) -> Vec<f64> {
        match self {
            FitterId::Ac7 => params.to_array().to_vec(),
            _ => params.alphas().to_array().to_vec(),
        }
    }

    /// Fits `data`; three-parameter estimates come back with standard margins.
    pub fn fit(&self, data: &BivariateSample, config: &FitConfig) -> Result<FitReport<Params7>> {
        match self {
            FitterId::Singular => em_singular_fit(data, config).map(|r| r.map(Params7::standard)),
            FitterId::Ac3Legacy => {
                em_ac3_fit(data, config, PseudoVariant::Legacy).map(|r| r.map(Params7::standard))
            }
            FitterId::Ac3Modified => em_ac3_fit(data, config, PseudoVariant::LogModified)
                .map(|r| r.map(Params7::standard)),
            FitterId::Ac7 => em_ac7_fit(data, config),
        }
    }

    /// Draws a sample from the model this fitter assumes. Three-parameter
    /// fitters sample with standard margins.
    pub fn simulate(&self, n: usize, params: &Params7, seed: u64) -> Result<BivariateSample> {
        let params = match self {
            FitterId::Ac7 => *params,
            _ => Params7::standard(params.alphas()),
        };
        if self.is_continuous() {
            sample_bvpac(n, &params, seed)
        } else {
            sample_bvpa(n, &params, seed)
        }
    }
}

impl fmt::Display for FitterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FitterId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FitterId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown fitter '{s}'")))
    }
}
