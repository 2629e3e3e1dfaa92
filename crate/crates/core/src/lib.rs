//! Marshall-Olkin bivariate Pareto distributions of the second kind: the
//! singular law and its absolutely continuous part.
//!
//! * [`pareto`], [`density`]: univariate and bivariate densities, marginals
//!   and log-likelihoods.
//! * [`sampler`]: seeded draws through the common-shock minimum construction.
//! * [`em`]: EM estimation for the singular model and three variants for the
//!   continuous model.
//! * [`bootstrap`], [`study`]: parametric bootstrap and Monte Carlo studies.
//!   Replicates run on the rayon pool when the `parallel` feature is on.
//! * [`pot`]: peaks-over-threshold preprocessing.

pub mod bootstrap;
pub mod density;
pub mod em;
pub mod error;
pub mod exec;
pub mod grid;
pub mod io;
pub mod params;
pub mod pareto;
pub mod pot;
pub mod sample;
pub mod sampler;
pub mod study;

pub use bootstrap::{parametric_bootstrap, percentile_interval, BootstrapReport, BootstrapSpec};
pub use density::{
    bvpa_pdf, bvpac_marginal_pdf, bvpac_pdf, loglik_ac3, loglik_ac7, Branch, LogLikelihood,
};
pub use em::{em_ac3_fit, em_ac7_fit, em_singular_fit, FitConfig, FitReport, FitterId, PseudoVariant};
pub use error::{Error, Result};
pub use exec::Execution;
pub use params::{Params3, Params7};
pub use pareto::{pareto_inverse_cdf, pareto_pdf, pareto_survival};
pub use pot::{pot_transform, PotConfig, PotResult, Threshold};
pub use sample::{partition, standardize, BivariateSample, DataPartition, Margin, DEFAULT_TIE_TOLERANCE};
pub use sampler::{sample_bvpa, sample_bvpac, SamplerConfig};
pub use study::{run_study, StudyConfig, StudyTable};
