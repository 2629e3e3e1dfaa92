//! Parameter vectors of the bivariate Pareto family.

use crate::error::{check_positive, Error, Result};

/// Shape parameters of the common shock and the two margins.
///
/// Equivalent to a [`Params7`] with zero locations and unit scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params3 {
    pub alpha0: f64,
    pub alpha1: f64,
    pub alpha2: f64,
}

impl Params3 {
    pub fn new(alpha0: f64, alpha1: f64, alpha2: f64) -> Result<Self> {
        let p = Self {
            alpha0,
            alpha1,
            alpha2,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check_positive("alpha0", self.alpha0)?;
        check_positive("alpha1", self.alpha1)?;
        check_positive("alpha2", self.alpha2)
    }

    pub fn sum(&self) -> f64 {
        self.alpha0 + self.alpha1 + self.alpha2
    }

    /// Normalizing constant `(a0 + a1 + a2) / (a1 + a2)` of the continuous part.
    pub fn c(&self) -> f64 {
        self.sum() / (self.alpha1 + self.alpha2)
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.alpha0, self.alpha1, self.alpha2]
    }

    /// Swaps the roles of the two margins.
    pub fn swapped(&self) -> Self {
        Self {
            alpha0: self.alpha0,
            alpha1: self.alpha2,
            alpha2: self.alpha1,
        }
    }
}

/// Full location/scale/shape parameter vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params7 {
    pub mu1: f64,
    pub mu2: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    pub alpha0: f64,
    pub alpha1: f64,
    pub alpha2: f64,
}

pub const PARAM7_NAMES: [&str; 7] = ["mu1", "mu2", "sigma1", "sigma2", "alpha0", "alpha1", "alpha2"];
pub const PARAM3_NAMES: [&str; 3] = ["alpha0", "alpha1", "alpha2"];

impl Params7 {
    pub fn new(
        mu1: f64,
        mu2: f64,
        sigma1: f64,
        sigma2: f64,
        alpha0: f64,
        alpha1: f64,
        alpha2: f64,
    ) -> Result<Self> {
        let p = Self {
            mu1,
            mu2,
            sigma1,
            sigma2,
            alpha0,
            alpha1,
            alpha2,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn from_slice(values: &[f64]) -> Result<Self> {
        match *values {
            [mu1, mu2, sigma1, sigma2, alpha0, alpha1, alpha2] => {
                Self::new(mu1, mu2, sigma1, sigma2, alpha0, alpha1, alpha2)
            }
            _ => Err(Error::Domain(format!(
                "expected 7 parameters, got {}",
                values.len()
            ))),
        }
    }

    /// Standard margins (zero location, unit scale) with the given shapes.
    pub fn standard(alpha: Params3) -> Self {
        Self {
            mu1: 0.0,
            mu2: 0.0,
            sigma1: 1.0,
            sigma2: 1.0,
            alpha0: alpha.alpha0,
            alpha1: alpha.alpha1,
            alpha2: alpha.alpha2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.mu1.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu1",
                value: self.mu1,
            });
        }
        if !self.mu2.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu2",
                value: self.mu2,
            });
        }
        check_positive("sigma1", self.sigma1)?;
        check_positive("sigma2", self.sigma2)?;
        self.alphas().validate()
    }

    pub fn alphas(&self) -> Params3 {
        Params3 {
            alpha0: self.alpha0,
            alpha1: self.alpha1,
            alpha2: self.alpha2,
        }
    }

    pub fn c(&self) -> f64 {
        self.alphas().c()
    }

    pub fn to_array(&self) -> [f64; 7] {
        [
            self.mu1,
            self.mu2,
            self.sigma1,
            self.sigma2,
            self.alpha0,
            self.alpha1,
            self.alpha2,
        ]
    }

    /// Standardized coordinates `((x1 - mu1) / sigma1, (x2 - mu2) / sigma2)`.
    pub fn standardize(&self, x1: f64, x2: f64) -> (f64, f64) {
        ((x1 - self.mu1) / self.sigma1, (x2 - self.mu2) / self.sigma2)
    }

    pub fn swapped(&self) -> Self {
        Self {
            mu1: self.mu2,
            mu2: self.mu1,
            sigma1: self.sigma2,
            sigma2: self.sigma1,
            alpha0: self.alpha0,
            alpha1: self.alpha2,
            alpha2: self.alpha1,
        }
    }
}

impl From<Params3> for Params7 {
    fn from(alpha: Params3) -> Self {
        Self::standard(alpha)
    }
}
