//! Univariate Pareto of the second kind, `Pa(II)(mu, sigma, alpha)`.
//!
//! Survival `(1 + (x - mu)/sigma)^(-alpha)` on `x >= mu`. The support is
//! taken as closed on the left so the density at `x = mu` is `alpha/sigma`;
//! below `mu` the density is zero and the survival is one.

use crate::error::{check_positive, Error, Result};

pub fn pareto_pdf(x: f64, mu: f64, sigma: f64, alpha: f64) -> Result<f64> {
    check_positive("sigma", sigma)?;
    check_positive("alpha", alpha)?;
    Ok(pdf_unchecked(x, mu, sigma, alpha))
}

pub fn pareto_survival(x: f64, mu: f64, sigma: f64, alpha: f64) -> Result<f64> {
    check_positive("sigma", sigma)?;
    check_positive("alpha", alpha)?;
    if x < mu {
        return Ok(1.0);
    }
    Ok((-alpha * ((x - mu) / sigma).ln_1p()).exp())
}

pub fn pareto_inverse_cdf(p: f64, mu: f64, sigma: f64, alpha: f64) -> Result<f64> {
    check_positive("sigma", sigma)?;
    check_positive("alpha", alpha)?;
    if !(0.0..1.0).contains(&p) {
        return Err(Error::Domain(format!("probability {p} outside [0, 1)")));
    }
    Ok(inverse_cdf_unchecked(p, mu, sigma, alpha))
}

#[inline]
pub(crate) fn pdf_unchecked(x: f64, mu: f64, sigma: f64, alpha: f64) -> f64 {
    if x < mu {
        return 0.0;
    }
    let z = (x - mu) / sigma;
    alpha / sigma * (-(alpha + 1.0) * z.ln_1p()).exp()
}

/// `ln f` for `x >= mu`; `-inf` below the support.
#[inline]
pub(crate) fn ln_pdf_unchecked(x: f64, mu: f64, sigma: f64, alpha: f64) -> f64 {
    if x < mu {
        return f64::NEG_INFINITY;
    }
    let z = (x - mu) / sigma;
    alpha.ln() - sigma.ln() - (alpha + 1.0) * z.ln_1p()
}

#[inline]
pub(crate) fn inverse_cdf_unchecked(p: f64, mu: f64, sigma: f64, alpha: f64) -> f64 {
    // (1-p)^(-1/alpha) - 1, written to keep precision for small p
    mu + sigma * (-(-p).ln_1p() / alpha).exp_m1()
}
