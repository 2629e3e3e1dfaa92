//! EM for the three-parameter absolutely continuous model.
//!
//! The diagonal group is never observed, so its size and its `Σ ln(1 + x)`
//! are replaced by their expectations under the current iterate.

use super::singular::check_standard_support;
use super::weights::{posterior_weights, pseudo_stats, PosteriorWeights, PseudoStats, PseudoVariant};
use super::{iterate, on_boundary, FitConfig, FitReport, FitWarning, GroupSums, Step};
use crate::error::{Error, Result};
use crate::params::Params3;
use crate::sample::{partition_standard, BivariateSample, DataPartition};

/// Closed-form M-step with imputed diagonal rows. Rows in `partition.i0`
/// are ignored.
pub fn m_step_continuous(
    partition: &DataPartition,
    data: &BivariateSample,
    weights: &PosteriorWeights,
    pseudo: &PseudoStats,
) -> Result<Params3> {
    let sums = GroupSums::new(partition, data);
    sums.objective(weights, pseudo.n0_tilde, pseudo.exposure())
        .maximize()
}

pub fn em_ac3_fit(
    data: &BivariateSample,
    config: &FitConfig,
    variant: PseudoVariant,
) -> Result<FitReport<Params3>> {
    config.validate()?;
    if data.is_empty() {
        return Err(Error::Domain("empty sample".into()));
    }
    check_standard_support(data)?;
    let part = partition_standard(data, config.tie_tolerance);
    if let Some(&i) = part.i0.first() {
        let (z1, z2) = data.rows()[i];
        return Err(Error::DiagonalInput { z1, z2 });
    }
    let sums = GroupSums::new(&part, data);

    let mut alpha = config.init_alpha;
    let trace = iterate(config, || {
        let w = posterior_weights(&alpha);
        let pseudo = pseudo_stats(&alpha, part.n1(), part.n2(), variant)?;
        let objective = sums.objective(&w, pseudo.n0_tilde, pseudo.exposure());
        let next = objective.maximize()?;
        let q = objective.value(&next);
        alpha = next;
        Ok(Step {
            q,
            boundary: on_boundary(&next),
        })
    })?;

    let mut warnings = Vec::new();
    if part.n1() == 0 || part.n2() == 0 {
        warnings.push(FitWarning::OneWedge);
    }
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
