//! E-step quantities: latent-indicator posteriors and the pseudo-data that
//! stands in for the unobservable diagonal group of the continuous model.

use crate::error::{Error, Result};
use crate::params::Params3;

/// Posteriors of which latent produced the unobserved coordinate.
///
/// `u1 = P(X2 came from U0 | X1 < X2)`, `w1 = P(X1 came from U0 | X1 > X2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PosteriorWeights {
    pub u1: f64,
    pub u2: f64,
    pub w1: f64,
    pub w2: f64,
}

pub fn posterior_weights(alpha: &Params3) -> PosteriorWeights {
    let Params3 {
        alpha0: a0,
        alpha1: a1,
        alpha2: a2,
    } = *alpha;
    // complements by subtraction so each pair sums to exactly 1.0
    let u1 = a0 / (a0 + a2);
    let w1 = a0 / (a0 + a1);
    PosteriorWeights {
        u1,
        u2: 1.0 - u1,
        w1,
        w2: 1.0 - w1,
    }
}

/// How the expected diagonal contribution is imputed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PseudoVariant {
    /// `E(U0 | U0 < min(U1, U2)) = 1/(a0+a1+a2-1)`, entering as `ln(1 + a)`.
    /// Exists only when `a0 + a1 + a2 > 1`.
    Legacy,
    /// `E(ln(1+U0) | U0 < min(U1, U2)) = 1/(a0+a1+a2)`, entering directly.
    LogModified,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoStats {
    /// Expected number of diagonal rows hidden from the continuous sample.
    pub n0_tilde: f64,
    pub a_value: f64,
    pub variant: PseudoVariant,
}

impl PseudoStats {
    /// Imputed `Σ ln(1 + x)` over the hidden diagonal rows.
    pub fn exposure(&self) -> f64 {
        match self.variant {
            PseudoVariant::Legacy => self.n0_tilde * self.a_value.ln_1p(),
            PseudoVariant::LogModified => self.n0_tilde * self.a_value,
        }
    }
}

pub fn pseudo_stats(alpha: &Params3, n1: usize, n2: usize, variant: PseudoVariant) -> Result<PseudoStats> {
    alpha.validate()?;
    let sum = alpha.sum();
    let n0_tilde = (n1 + n2) as f64 * alpha.alpha0 / (alpha.alpha1 + alpha.alpha2);
    let a_value = match variant {
        PseudoVariant::Legacy => {
            if sum <= 1.0 {
                return Err(Error::RestrictionViolated { sum });
            }
            1.0 / (sum - 1.0)
        }
        PseudoVariant::LogModified => 1.0 / sum,
    };
    Ok(PseudoStats {
        n0_tilde,
        a_value,
        variant,
    })
}
