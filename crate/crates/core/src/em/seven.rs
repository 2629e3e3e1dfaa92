//! Seven-parameter continuous fit: locations fixed at the column minima,
//! one gradient-ascent step per iteration on each scale using the marginal
//! log-likelihood, then the continuous M-step on the standardized data.

use super::weights::{posterior_weights, pseudo_stats, PseudoVariant};
use super::{iterate, on_boundary, FitConfig, FitReport, FitWarning, GroupSums, Step};
use crate::density::{margin_parts, marginal_unchecked};
use crate::error::{Error, Result};
use crate::params::Params7;
use crate::sample::{partition_standard, standardize, BivariateSample, Margin};

/// Derivative in `sigma_j` of `Σ_i ln f_Zj(x_ji)`, the marginal
/// log-likelihood of one column.
pub fn marginal_sigma_grad(data: &BivariateSample, margin: Margin, params: &Params7) -> Result<f64> {
    params.validate()?;
    let (mu, sigma, own) = margin_parts(margin, params);
    let slow = params.alpha0 + own;
    let fast = params.alphas().sum();
    // f_Z ∝ f(slow) - k f(fast); work relative to f(slow) to avoid underflow
    let k = params.alpha0 / fast;
    let shape_ratio = k * fast / slow;
    let mut total = 0.0;
    for (row, x) in column(data, margin).enumerate() {
        if x < mu {
            return Err(Error::NegInfLikelihood { row });
        }
        let z = (x - mu) / sigma;
        let lz = z.ln_1p();
        let r = shape_ratio * (-(fast - slow) * lz).exp();
        let dlog = |a: f64| (-1.0 + (a + 1.0) * z / (1.0 + z)) / sigma;
        total += (dlog(slow) - r * dlog(fast)) / (1.0 - r);
    }
    Ok(total)
}

/// Central finite-difference counterpart of [`marginal_sigma_grad`] with
/// step `1e-6 * max(1, sigma)`.
pub fn marginal_sigma_grad_fd(data: &BivariateSample, margin: Margin, params: &Params7) -> Result<f64> {
    params.validate()?;
    let (mu, sigma, own) = margin_parts(margin, params);
    let h = 1e-6 * sigma.max(1.0);
    let loglik = |s: f64| -> Result<f64> {
        let mut total = 0.0;
        for (row, x) in column(data, margin).enumerate() {
            if x < mu {
                return Err(Error::NegInfLikelihood { row });
            }
            total += marginal_unchecked(x, mu, s, own, params).ln();
        }
        Ok(total)
    };
    Ok((loglik(sigma + h)? - loglik(sigma - h)?) / (2.0 * h))
}

fn column(data: &BivariateSample, margin: Margin) -> impl Iterator<Item = f64> + '_ {
    data.rows().iter().map(move |&(a, b)| match margin {
        Margin::First => a,
        Margin::Second => b,
    })
}

fn distinct_values(values: impl Iterator<Item = f64>) -> usize {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v.len()
}

pub fn em_ac7_fit(data: &BivariateSample, config: &FitConfig) -> Result<FitReport<Params7>> {
    config.validate()?;
    for margin in [Margin::First, Margin::Second] {
        if distinct_values(column(data, margin)) < 2 {
            return Err(Error::DegenerateData(format!(
                "margin {margin:?} needs at least two distinct values"
            )));
        }
    }
    let mu1 = data.first().fold(f64::INFINITY, f64::min);
    let mu2 = data.second().fold(f64::INFINITY, f64::min);

    let mut params = Params7 {
        mu1,
        mu2,
        sigma1: config.init_sigma[0],
        sigma2: config.init_sigma[1],
        alpha0: config.init_alpha.alpha0,
        alpha1: config.init_alpha.alpha1,
        alpha2: config.init_alpha.alpha2,
    };
    let mut one_wedge = false;

    let trace = iterate(config, || {
        let g1 = marginal_sigma_grad(data, Margin::First, &params)?;
        let g2 = marginal_sigma_grad(data, Margin::Second, &params)?;
        if !(g1.is_finite() && g2.is_finite()) {
            return Err(Error::DegenerateData("non-finite scale gradient".into()));
        }
        params.sigma1 = (params.sigma1 + config.step_size * g1).max(config.sigma_floor);
        params.sigma2 = (params.sigma2 + config.step_size * g2).max(config.sigma_floor);

        let z = standardize(data, params.mu1, params.mu2, params.sigma1, params.sigma2)?;
        let part = partition_standard(&z, config.tie_tolerance);
        one_wedge |= part.n1() == 0 || part.n2() == 0;
        let sums = GroupSums::new(&part, &z);

        let alpha = params.alphas();
        let w = posterior_weights(&alpha);
        let pseudo = pseudo_stats(&alpha, part.n1(), part.n2(), PseudoVariant::LogModified)?;
        let objective = sums.objective(&w, pseudo.n0_tilde, pseudo.exposure());
        let next = objective.maximize()?;
        let q = objective.value(&next);
        params.alpha0 = next.alpha0;
        params.alpha1 = next.alpha1;
        params.alpha2 = next.alpha2;
        Ok(Step {
            q,
            boundary: on_boundary(&next),
        })
    })?;

    let mut warnings = Vec::new();
    if one_wedge {
        warnings.push(FitWarning::OneWedge);
    }
    if trace.boundary {
        warnings.push(FitWarning::Boundary);
    }
    Ok(FitReport {
        estimate: params,
        iterations: trace.q_trace.len(),
        q_trace: trace.q_trace,
        converged: trace.converged,
        capped: trace.capped,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::sample_bvpac;

    fn truth() -> Params7 {
        Params7::new(0.1, 0.1, 0.8, 0.8, 2.0, 0.4, 0.5).unwrap()
    }

    #[test]
    fn gradient_positive_far_below_truth() {
        let p = truth();
        let data = sample_bvpac(1000, &p, 5).unwrap();
        let low = Params7 {
            sigma1: 0.1,
            sigma2: 0.1,
            ..p
        };
        assert!(marginal_sigma_grad(&data, Margin::First, &low).unwrap() > 0.0);
        assert!(marginal_sigma_grad(&data, Margin::Second, &low).unwrap() > 0.0);
    }

    #[test]
    fn gradient_rejects_points_below_location() {
        let p = truth();
        let data = BivariateSample::new(vec![(0.0, 1.0)]).unwrap();
        assert!(matches!(
            marginal_sigma_grad(&data, Margin::First, &p),
            Err(Error::NegInfLikelihood { row: 0 })
        ));
    }

    #[test]
    fn scales_stay_above_floor() {
        let data = sample_bvpac(200, &truth(), 3).unwrap();
        let config = FitConfig {
            step_size: 1e4,
            init_sigma: [50.0, 50.0],
            max_iter: 1,
            ..FitConfig::seven_param()
        };
        let r = em_ac7_fit(&data, &config).unwrap();
        assert_eq!(r.estimate.sigma1, config.sigma_floor);
        assert_eq!(r.estimate.sigma2, config.sigma_floor);
    }

    #[test]
    fn location_is_column_minimum() {
        let data = sample_bvpac(300, &truth(), 6).unwrap();
        let r = em_ac7_fit(&data, &FitConfig::seven_param()).unwrap();
        let min1 = data.first().fold(f64::INFINITY, f64::min);
        let min2 = data.second().fold(f64::INFINITY, f64::min);
        assert_eq!(r.estimate.mu1, min1);
        assert_eq!(r.estimate.mu2, min2);
        assert!(min1 >= 0.1 && min2 >= 0.1);
        assert_eq!(r.q_trace.len(), r.iterations);
    }

    #[test]
    fn constant_column_is_degenerate() {
        let data = BivariateSample::new(vec![(1.0, 2.0), (1.0, 3.0), (1.0, 4.0)]).unwrap();
        assert!(matches!(
            em_ac7_fit(&data, &FitConfig::seven_param()),
            Err(Error::DegenerateData(_))
        ));
    }
}
