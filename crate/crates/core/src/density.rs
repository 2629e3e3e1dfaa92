//! Joint and marginal densities of the Marshall-Olkin bivariate Pareto law
//! and of its absolutely continuous part, plus the continuous-part
//! log-likelihoods.

use crate::error::{Error, Result};
use crate::params::{Params3, Params7};
use crate::pareto::{ln_pdf_unchecked, pdf_unchecked};
use crate::sample::{classify, BivariateSample, Margin, Side, DEFAULT_TIE_TOLERANCE};

/// Which piece of the singular joint density was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Mass on the line `(x1-mu1)/sigma1 == (x2-mu2)/sigma2`.
    F0,
    /// `(x1-mu1)/sigma1 < (x2-mu2)/sigma2`.
    F1,
    /// `(x1-mu1)/sigma1 > (x2-mu2)/sigma2`.
    F2,
}

/// `ln f1` at standardized coordinates, including the `1/(sigma1 sigma2)` Jacobian.
#[inline]
pub(crate) fn ln_f1(t1: f64, t2: f64, p: &Params7) -> f64 {
    ln_pdf_unchecked(t1, 0.0, 1.0, p.alpha1) + ln_pdf_unchecked(t2, 0.0, 1.0, p.alpha0 + p.alpha2)
        - p.sigma1.ln()
        - p.sigma2.ln()
}

#[inline]
pub(crate) fn ln_f2(t1: f64, t2: f64, p: &Params7) -> f64 {
    ln_pdf_unchecked(t1, 0.0, 1.0, p.alpha0 + p.alpha1) + ln_pdf_unchecked(t2, 0.0, 1.0, p.alpha2)
        - p.sigma1.ln()
        - p.sigma2.ln()
}

/// Density of the singular part along the line, with respect to `x1`.
#[inline]
pub(crate) fn ln_f0(t: f64, p: &Params7) -> f64 {
    p.alpha0.ln() - p.sigma1.ln() - (p.alphas().sum() + 1.0) * t.ln_1p()
}

fn check_support(x1: f64, x2: f64, p: &Params7) -> Result<()> {
    if x1 >= p.mu1 && x2 >= p.mu2 {
        Ok(())
    } else {
        Err(Error::Support { x1, x2 })
    }
}

/// Singular (BVPA) density at `(x1, x2)`.
///
/// On the line the value is the density of the common shock with respect to
/// `x1`, so `∫∫ f1 + ∫∫ f2 + ∫ f0 dx1 = 1`. Points within the default tie
/// tolerance of the line are treated as on it.
pub fn bvpa_pdf(x1: f64, x2: f64, params: &Params7) -> Result<(f64, Branch)> {
    params.validate()?;
    check_support(x1, x2, params)?;
    let (t1, t2) = params.standardize(x1, x2);
    Ok(match classify(t1, t2, DEFAULT_TIE_TOLERANCE) {
        Side::Diagonal => (ln_f0(t1, params).exp(), Branch::F0),
        Side::Below => (ln_f1(t1, t2, params).exp(), Branch::F1),
        Side::Above => (ln_f2(t1, t2, params).exp(), Branch::F2),
    })
}

/// Absolutely continuous (BVPAC) density, `c * f1` or `c * f2`.
///
/// Points on the singular line (up to the default tie tolerance) have no
/// defined value and are rejected.
pub fn bvpac_pdf(z1: f64, z2: f64, params: &Params7) -> Result<f64> {
    params.validate()?;
    check_support(z1, z2, params)?;
    let (t1, t2) = params.standardize(z1, z2);
    if classify(t1, t2, DEFAULT_TIE_TOLERANCE) == Side::Diagonal {
        return Err(Error::DiagonalInput { z1, z2 });
    }
    Ok(bvpac_pdf_unchecked(t1, t2, params))
}

/// BVPAC density from standardized coordinates; ties use the `f1` branch.
#[inline]
pub(crate) fn bvpac_pdf_unchecked(t1: f64, t2: f64, p: &Params7) -> f64 {
    let ln = if t1 <= t2 {
        ln_f1(t1, t2, p)
    } else {
        ln_f2(t1, t2, p)
    };
    p.c() * ln.exp()
}

/// Marginal density of one coordinate of the BVPAC law:
/// `c f_PA(z; a0 + a_j) - c a0/(a0+a1+a2) f_PA(z; a0+a1+a2)`.
pub fn bvpac_marginal_pdf(z: f64, margin: Margin, params: &Params7) -> Result<f64> {
    params.validate()?;
    let (mu, sigma, own) = margin_parts(margin, params);
    if z < mu {
        return Err(Error::Support {
            x1: if margin == Margin::First { z } else { f64::NAN },
            x2: if margin == Margin::Second { z } else { f64::NAN },
        });
    }
    Ok(marginal_unchecked(z, mu, sigma, own, params))
}

/// `(mu, sigma, alpha of the own latent)` for a margin.
#[inline]
pub(crate) fn margin_parts(margin: Margin, p: &Params7) -> (f64, f64, f64) {
    match margin {
        Margin::First => (p.mu1, p.sigma1, p.alpha1),
        Margin::Second => (p.mu2, p.sigma2, p.alpha2),
    }
}

#[inline]
pub(crate) fn marginal_unchecked(z: f64, mu: f64, sigma: f64, own: f64, p: &Params7) -> f64 {
    let sum = p.alphas().sum();
    let c = p.c();
    c * pdf_unchecked(z, mu, sigma, p.alpha0 + own)
        - c * p.alpha0 / sum * pdf_unchecked(z, mu, sigma, sum)
}

/// Why a log-likelihood evaluated to `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    BelowLocation,
    OnDiagonal,
}

/// Log-likelihood value, or a flagged `-inf` naming the first offending row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogLikelihood {
    Finite(f64),
    NegInfinity { row: usize, violation: Violation },
}

impl LogLikelihood {
    pub fn value(&self) -> f64 {
        match self {
            LogLikelihood::Finite(v) => *v,
            LogLikelihood::NegInfinity { .. } => f64::NEG_INFINITY,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LogLikelihood::Finite(_))
    }

    pub fn into_result(self) -> Result<f64> {
        match self {
            LogLikelihood::Finite(v) => Ok(v),
            LogLikelihood::NegInfinity { row, .. } => Err(Error::NegInfLikelihood { row }),
        }
    }
}

/// `Σ ln bvpac_pdf(x1i, x2i)` over the sample.
pub fn loglik_ac7(data: &BivariateSample, params: &Params7) -> Result<LogLikelihood> {
    params.validate()?;
    let ln_c = params.c().ln();
    let mut total = 0.0;
    for (row, &(x1, x2)) in data.rows().iter().enumerate() {
        if x1 < params.mu1 || x2 < params.mu2 {
            return Ok(LogLikelihood::NegInfinity {
                row,
                violation: Violation::BelowLocation,
            });
        }
        let (t1, t2) = params.standardize(x1, x2);
        total += ln_c
            + if t1 < t2 {
                ln_f1(t1, t2, params)
            } else if t1 > t2 {
                ln_f2(t1, t2, params)
            } else {
                return Ok(LogLikelihood::NegInfinity {
                    row,
                    violation: Violation::OnDiagonal,
                });
            };
    }
    Ok(LogLikelihood::Finite(total))
}

/// Standard-margin log-likelihood, evaluated from group counts and
/// `Σ ln(1 + z)` sums rather than row by row.
pub fn loglik_ac3(data: &BivariateSample, alpha: &Params3) -> Result<LogLikelihood> {
    alpha.validate()?;
    let Params3 {
        alpha0: a0,
        alpha1: a1,
        alpha2: a2,
    } = *alpha;
    let (mut n1, mut n2) = (0.0, 0.0);
    // ln(1+z1), ln(1+z2) sums on each side of the line
    let (mut s11, mut s21, mut s12, mut s22) = (0.0, 0.0, 0.0, 0.0);
    for (row, &(z1, z2)) in data.rows().iter().enumerate() {
        if z1 < 0.0 || z2 < 0.0 {
            return Ok(LogLikelihood::NegInfinity {
                row,
                violation: Violation::BelowLocation,
            });
        }
        if z1 < z2 {
            n1 += 1.0;
            s11 += z1.ln_1p();
            s21 += z2.ln_1p();
        } else if z1 > z2 {
            n2 += 1.0;
            s12 += z1.ln_1p();
            s22 += z2.ln_1p();
        } else {
            return Ok(LogLikelihood::NegInfinity {
                row,
                violation: Violation::OnDiagonal,
            });
        }
    }
    let sum = a0 + a1 + a2;
    let value = (n1 + n2) * (sum.ln() - (a1 + a2).ln())
        + n1 * a1.ln()
        + n1 * (a0 + a2).ln()
        + n2 * (a0 + a1).ln()
        + n2 * a2.ln()
        - (a1 + 1.0) * s11
        - (a0 + a2 + 1.0) * s21
        - (a0 + a1 + 1.0) * s12
        - (a2 + 1.0) * s22;
    Ok(LogLikelihood::Finite(value))
}

/// Log-likelihood of the singular (BVPA) model with standard margins.
/// Rows within the tie tolerance of the line use `f0`.
pub fn loglik_singular3(data: &BivariateSample, alpha: &Params3) -> Result<LogLikelihood> {
    alpha.validate()?;
    let p = Params7::standard(*alpha);
    let mut total = 0.0;
    for (row, &(z1, z2)) in data.rows().iter().enumerate() {
        if z1 < 0.0 || z2 < 0.0 {
            return Ok(LogLikelihood::NegInfinity {
                row,
                violation: Violation::BelowLocation,
            });
        }
        total += match classify(z1, z2, DEFAULT_TIE_TOLERANCE) {
            Side::Diagonal => ln_f0(z1, &p),
            Side::Below => ln_f1(z1, z2, &p),
            Side::Above => ln_f2(z1, z2, &p),
        };
    }
    Ok(LogLikelihood::Finite(total))
}
