//! Seeded draws from the singular and absolutely continuous laws through the
//! common-shock minimum construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::params::Params7;
use crate::pareto::inverse_cdf_unchecked;
use crate::sample::{classify, BivariateSample, Side, DEFAULT_TIE_TOLERANCE};

/// Generator stream used everywhere a seed is accepted.
pub type StreamRng = ChaCha8Rng;

pub fn stream(seed: u64) -> StreamRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub n: usize,
    /// Cap on total latent-triple draws for rejection sampling.
    pub max_rejection_rounds: usize,
}

impl SamplerConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        Self {
            seed,
            n,
            max_rejection_rounds: n.saturating_mul(1000).max(1),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("sample size must be at least 1".into()));
        }
        if self.max_rejection_rounds == 0 {
            return Err(Error::Domain("max_rejection_rounds must be at least 1".into()));
        }
        Ok(())
    }
}

/// One row: latents drawn in the order U0, U1, U2.
#[inline]
fn draw_row<R: Rng>(rng: &mut R, p: &Params7) -> (f64, f64) {
    let u0 = inverse_cdf_unchecked(rng.random::<f64>(), 0.0, 1.0, p.alpha0);
    let u1 = inverse_cdf_unchecked(rng.random::<f64>(), p.mu1, p.sigma1, p.alpha1);
    let u2 = inverse_cdf_unchecked(rng.random::<f64>(), p.mu2, p.sigma2, p.alpha2);
    (
        (p.sigma1 * u0 + p.mu1).min(u1),
        (p.sigma2 * u0 + p.mu2).min(u2),
    )
}

pub fn sample_bvpa(n: usize, params: &Params7, seed: u64) -> Result<BivariateSample> {
    params.validate()?;
    SamplerConfig::new(n, seed).validate()?;
    let mut rng = stream(seed);
    let rows = (0..n).map(|_| draw_row(&mut rng, params)).collect();
    Ok(BivariateSample::from_rows_unchecked(rows))
}

pub fn sample_bvpac(n: usize, params: &Params7, seed: u64) -> Result<BivariateSample> {
    sample_bvpac_with(&SamplerConfig::new(n, seed), params)
}

/// Rejection sampler: singular draws that land on the line are discarded.
pub fn sample_bvpac_with(config: &SamplerConfig, params: &Params7) -> Result<BivariateSample> {
    params.validate()?;
    config.validate()?;
    let mut rng = stream(config.seed);
    let mut rows = Vec::with_capacity(config.n);
    let mut draws = 0usize;
    while rows.len() < config.n {
        if draws >= config.max_rejection_rounds {
            return Err(Error::SamplingStall {
                requested: config.n,
                accepted: rows.len(),
                draws,
            });
        }
        draws += 1;
        let (x1, x2) = draw_row(&mut rng, params);
        let (t1, t2) = params.standardize(x1, x2);
        if classify(t1, t2, DEFAULT_TIE_TOLERANCE) != Side::Diagonal {
            rows.push((x1, x2));
        }
    }
    Ok(BivariateSample::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Params3;
    use crate::sample::partition;

    fn params(a0: f64, a1: f64, a2: f64) -> Params7 {
        Params7::new(0.1, -0.2, 0.8, 1.3, a0, a1, a2).unwrap()
    }

    #[test]
    fn same_seed_same_sample() {
        let p = params(2.0, 0.4, 0.5);
        assert_eq!(sample_bvpa(500, &p, 11).unwrap(), sample_bvpa(500, &p, 11).unwrap());
        assert_eq!(sample_bvpac(500, &p, 11).unwrap(), sample_bvpac(500, &p, 11).unwrap());
        assert_ne!(sample_bvpa(500, &p, 11).unwrap(), sample_bvpa(500, &p, 12).unwrap());
    }

    #[test]
    fn zero_size_rejected() {
        let p = params(1.0, 1.0, 1.0);
        assert!(sample_bvpa(0, &p, 1).is_err());
        assert!(sample_bvpac(0, &p, 1).is_err());
    }

    #[test]
    fn support_is_respected() {
        let p = params(0.7, 2.0, 0.3);
        let s = sample_bvpa(5000, &p, 3).unwrap();
        assert!(s.rows().iter().all(|&(a, b)| a >= p.mu1 && b >= p.mu2));
    }

    #[test]
    fn heavy_common_shock_is_mostly_diagonal() {
        let p = Params7::standard(Params3::new(50.0, 0.1, 0.1).unwrap());
        let s = sample_bvpa(10_000, &p, 5).unwrap();
        let part = partition(&s, 0.0, 0.0, 1.0, 1.0, DEFAULT_TIE_TOLERANCE).unwrap();
        assert!(part.n0() as f64 / 10_000.0 >= 0.99);
    }

    #[test]
    fn bvpac_has_no_diagonal_rows() {
        let p = params(2.0, 0.4, 0.5);
        let s = sample_bvpac(3000, &p, 9).unwrap();
        let part = partition(&s, p.mu1, p.mu2, p.sigma1, p.sigma2, DEFAULT_TIE_TOLERANCE).unwrap();
        assert_eq!(part.n0(), 0);
        assert_eq!(s.len(), 3000);
    }

    #[test]
    fn acceptance_rate_matches_continuous_mass() {
        let p = params(2.0, 0.4, 0.5);
        let config = SamplerConfig::new(10_000, 21);
        let mut rng = stream(config.seed);
        let mut draws = 0usize;
        let mut accepted = 0usize;
        while accepted < config.n {
            draws += 1;
            let (x1, x2) = draw_row(&mut rng, &p);
            let (t1, t2) = p.standardize(x1, x2);
            if classify(t1, t2, DEFAULT_TIE_TOLERANCE) != Side::Diagonal {
                accepted += 1;
            }
        }
        let rate = accepted as f64 / draws as f64;
        assert!((rate - 0.9 / 2.9).abs() < 0.01, "rate {rate}");
    }

    #[test]
    fn stall_is_reported() {
        let p = Params7::standard(Params3::new(1e6, 1e-6, 1e-6).unwrap());
        let config = SamplerConfig {
            seed: 1,
            n: 10,
            max_rejection_rounds: 5,
        };
        assert!(matches!(
            sample_bvpac_with(&config, &p),
            Err(Error::SamplingStall { draws: 5, .. })
        ));
    }
}
