//! EM for the singular three-parameter model (standard margins).

use super::{iterate, on_boundary, FitConfig, FitReport, FitWarning, GroupSums, PosteriorWeights, Step};
use super::weights::posterior_weights;
use crate::error::{Error, Result};
use crate::params::Params3;
use crate::sample::{partition_standard, BivariateSample, DataPartition};

/// Closed-form maximizer of the complete-data pseudo log-likelihood.
///
/// The result may contain a zero shape (e.g. `alpha1` when no row lies off
/// the line); callers treat that as a boundary estimate.
pub fn m_step_singular(
    partition: &DataPartition,
    data: &BivariateSample,
    weights: &PosteriorWeights,
) -> Result<Params3> {
    let sums = GroupSums::new(partition, data);
    sums.objective(weights, sums.n0, sums.l0).maximize()
}

/// Pseudo log-likelihood of the singular model at `alpha`, with the
/// expectations taken under `weights`.
pub fn pseudo_loglik_singular(
    partition: &DataPartition,
    data: &BivariateSample,
    weights: &PosteriorWeights,
    alpha: &Params3,
) -> f64 {
    let sums = GroupSums::new(partition, data);
    sums.objective(weights, sums.n0, sums.l0).value(alpha)
}

pub(crate) fn check_standard_support(data: &BivariateSample) -> Result<()> {
    match data.rows().iter().find(|&&(a, b)| !(a >= 0.0 && b >= 0.0)) {
        Some(&(x1, x2)) => Err(Error::Support { x1, x2 }),
        None => Ok(()),
    }
}

pub fn em_singular_fit(data: &BivariateSample, config: &FitConfig) -> Result<FitReport<Params3>> {
    config.validate()?;
    if data.is_empty() {
        return Err(Error::Domain("empty sample".into()));
    }
    check_standard_support(data)?;
    let part = partition_standard(data, config.tie_tolerance);
    let sums = GroupSums::new(&part, data);

    let mut alpha = config.init_alpha;
    let trace = iterate(config, || {
        let w = posterior_weights(&alpha);
        let objective = sums.objective(&w, sums.n0, sums.l0);
        let next = objective.maximize()?;
        let q = objective.value(&next);
        alpha = next;
        Ok(Step {
            q,
            boundary: on_boundary(&next),
        })
    })?;

    let mut warnings = Vec::new();
    if trace.boundary {
        warnings.push(FitWarning::Boundary);
    }
    Ok(FitReport {
        estimate: alpha,
        iterations: trace.q_trace.len(),
        q_trace: trace.q_trace,
        converged: trace.converged,
        capped: trace.capped,
        warnings,
    })
}
