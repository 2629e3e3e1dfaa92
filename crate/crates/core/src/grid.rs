//! Density of the continuous part tabulated on a rectangular grid.

use crate::density::bvpac_pdf_unchecked;
use crate::error::{Error, Result};
use crate::params::Params7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x1_range: (f64, f64),
    pub x2_range: (f64, f64),
    pub x1_resolution: usize,
    pub x2_resolution: usize,
}

impl GridSpec {
    pub fn square(lo: f64, hi: f64, resolution: usize) -> Self {
        Self {
            x1_range: (lo, hi),
            x2_range: (lo, hi),
            x1_resolution: resolution,
            x2_resolution: resolution,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    pub x1: Vec<f64>,
    pub x2: Vec<f64>,
    /// `values[i][j]` is the density at `(x1[i], x2[j])`.
    pub values: Vec<Vec<f64>>,
}

fn linspace((lo, hi): (f64, f64), count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count - 1) as f64;
    (0..count)
        .map(|i| if i + 1 == count { hi } else { lo + step * i as f64 })
        .collect()
}

fn check_axis(name: &str, (lo, hi): (f64, f64), resolution: usize, mu: f64) -> Result<()> {
    if resolution < 2 {
        return Err(Error::Domain(format!("{name} resolution must be at least 2")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain(format!("{name} range [{lo}, {hi}] is empty")));
    }
    if lo < mu {
        return Err(Error::Domain(format!(
            "{name} range starts at {lo}, below the location {mu}"
        )));
    }
    Ok(())
}

/// Tabulates the continuous density. Cells exactly on the singular line use
/// the `f1` branch.
pub fn density_grid(params: &Params7, spec: &GridSpec) -> Result<DensityGrid> {
    params.validate()?;
    check_axis("x1", spec.x1_range, spec.x1_resolution, params.mu1)?;
    check_axis("x2", spec.x2_range, spec.x2_resolution, params.mu2)?;
    let x1 = linspace(spec.x1_range, spec.x1_resolution);
    let x2 = linspace(spec.x2_range, spec.x2_resolution);
    let values = x1
        .iter()
        .map(|&a| {
            x2.iter()
                .map(|&b| {
                    let (t1, t2) = params.standardize(a, b);
                    bvpac_pdf_unchecked(t1, t2, params)
                })
                .collect()
        })
        .collect();
    Ok(DensityGrid { x1, x2, values })
}

impl DensityGrid {
    /// Row-major CSV: a header of `x2` values, then one row per `x1` value.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x1\\x2");
        for b in &self.x2 {
            out.push_str(&format!(",{b}"));
        }
        out.push('\n');
        for (a, row) in self.x1.iter().zip(&self.values) {
            out.push_str(&a.to_string());
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    /// Riemann sum `Σ f Δx1 Δx2` over the grid nodes.
    pub fn riemann_mass(&self) -> f64 {
        let dx = (self.x1[self.x1.len() - 1] - self.x1[0]) / (self.x1.len() - 1) as f64;
        let dy = (self.x2[self.x2.len() - 1] - self.x2[0]) / (self.x2.len() - 1) as f64;
        self.values.iter().flatten().sum::<f64>() * dx * dy
    }
}
