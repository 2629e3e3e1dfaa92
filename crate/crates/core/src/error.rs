use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("point ({x1}, {x2}) lies outside the support")]
    Support { x1: f64, x2: f64 },

    #[error("point ({z1}, {z2}) lies on the singular line; the continuous density is undefined there")]
    DiagonalInput { z1: f64, z2: f64 },

    #[error("log-likelihood is -inf: row {row} violates the support")]
    NegInfLikelihood { row: usize },

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("legacy pseudo-data needs alpha0 + alpha1 + alpha2 > 1, got {sum}")]
    RestrictionViolated { sum: f64 },

    #[error("rejection sampler stalled: {accepted} of {requested} rows after {draws} draws")]
    SamplingStall {
        requested: usize,
        accepted: usize,
        draws: usize,
    },

    #[error("all {replicates} bootstrap replicates failed")]
    BootstrapFailure { replicates: usize },

    #[error("no rows exceed both thresholds")]
    EmptyResult,

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value })
    }
}
