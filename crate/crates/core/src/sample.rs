//! Paired observations and the three-way split used by every fitter.

use crate::error::{check_positive, Error, Result};

/// Default tie tolerance, relative to `max(|z1|, |z2|, 1)`.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BivariateSample {
    rows: Vec<(f64, f64)>,
}

impl BivariateSample {
    pub fn new(rows: Vec<(f64, f64)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Domain("sample must contain at least one row".into()));
        }
        Ok(Self { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<(f64, f64)>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[(f64, f64)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn first(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(|r| r.0)
    }

    pub fn second(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(|r| r.1)
    }

    /// Column `1` or `2`.
    pub fn column(&self, margin: Margin) -> Vec<f64> {
        match margin {
            Margin::First => self.first().collect(),
            Margin::Second => self.second().collect(),
        }
    }

    pub fn swapped(&self) -> Self {
        Self {
            rows: self.rows.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    pub fn into_rows(self) -> Vec<(f64, f64)> {
        self.rows
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Margin {
    First,
    Second,
}

impl TryFrom<u8> for Margin {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        match value {
            1 => Ok(Margin::First),
            2 => Ok(Margin::Second),
            other => Err(Error::Domain(format!("margin must be 1 or 2, got {other}"))),
        }
    }
}

/// `z_ji = (x_ji - mu_j) / sigma_j` elementwise. Values below zero are kept.
pub fn standardize(
    data: &BivariateSample,
    mu1: f64,
    mu2: f64,
    sigma1: f64,
    sigma2: f64,
) -> Result<BivariateSample> {
    check_positive("sigma1", sigma1)?;
    check_positive("sigma2", sigma2)?;
    Ok(BivariateSample::from_rows_unchecked(
        data.rows
            .iter()
            .map(|&(x1, x2)| ((x1 - mu1) / sigma1, (x2 - mu2) / sigma2))
            .collect(),
    ))
}

/// Index sets of rows below, on and above the singular line.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DataPartition {
    /// Ties, `z1 == z2` within tolerance.
    pub i0: Vec<usize>,
    /// `z1 < z2`.
    pub i1: Vec<usize>,
    /// `z1 > z2`.
    pub i2: Vec<usize>,
}

impl DataPartition {
    pub fn n0(&self) -> usize {
        self.i0.len()
    }

    pub fn n1(&self) -> usize {
        self.i1.len()
    }

    pub fn n2(&self) -> usize {
        self.i2.len()
    }

    pub fn len(&self) -> usize {
        self.n0() + self.n1() + self.n2()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Which side of the singular line a standardized pair falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Diagonal,
    Below,
    Above,
}

#[inline]
pub fn classify(z1: f64, z2: f64, tie_tolerance: f64) -> Side {
    let scale = z1.abs().max(z2.abs()).max(1.0);
    if (z1 - z2).abs() <= tie_tolerance * scale {
        Side::Diagonal
    } else if z1 < z2 {
        Side::Below
    } else {
        Side::Above
    }
}

pub fn partition(
    data: &BivariateSample,
    mu1: f64,
    mu2: f64,
    sigma1: f64,
    sigma2: f64,
    tie_tolerance: f64,
) -> Result<DataPartition> {
    check_positive("sigma1", sigma1)?;
    check_positive("sigma2", sigma2)?;
    if tie_tolerance.is_nan() || tie_tolerance < 0.0 {
        return Err(Error::InvalidParameter {
            name: "tie_tolerance",
            value: tie_tolerance,
        });
    }
    let mut out = DataPartition::default();
    for (i, &(x1, x2)) in data.rows.iter().enumerate() {
        let z1 = (x1 - mu1) / sigma1;
        let z2 = (x2 - mu2) / sigma2;
        match classify(z1, z2, tie_tolerance) {
            Side::Diagonal => out.i0.push(i),
            Side::Below => out.i1.push(i),
            Side::Above => out.i2.push(i),
        }
    }
    Ok(out)
}

/// Partition of already-standardized data.
pub fn partition_standard(data: &BivariateSample, tie_tolerance: f64) -> DataPartition {
    partition(data, 0.0, 0.0, 1.0, 1.0, tie_tolerance).expect("unit scales are valid")
}
