//! Command implementations behind the `bvpareto` binary.
//!
//! Exit codes: `0` success, `1` input or parameter error, `2` a fit stopped
//! without converging.

pub mod report;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bvpareto::bootstrap::BootstrapReport;
use bvpareto::em::{FitConfig, FitterId};
use bvpareto::grid::{density_grid, GridSpec};
use bvpareto::io::{read_csv, write_csv, write_csv_to};
use bvpareto::{
    parametric_bootstrap, pot_transform, run_study, sample_bvpa, sample_bvpac, BootstrapSpec, Params3,
    Params7, PotConfig, StudyConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::FitSummary;

#[derive(Debug, Parser)]
#[command(name = "bvpareto", version, about = "Bivariate Pareto simulation, EM fitting and bootstrap")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a sample and write it as CSV.
    Simulate(SimulateArgs),
    /// Fit a CSV sample and print a key=value report.
    Fit(FitArgs),
    /// Parametric bootstrap around a parameter vector or a fit of a CSV sample.
    Bootstrap(BootstrapArgs),
    /// Peaks over threshold: keep rows exceeding both thresholds, rescale by them.
    Pot(PotArgs),
    /// Tabulate the continuous density on a grid.
    Grid(GridArgs),
    /// Monte Carlo table of average estimates, MSE and bootstrap intervals.
    Study(StudyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Bvpa,
    Bvpac,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ParamArgs {
    /// mu1,mu2,sigma1,sigma2,alpha0,alpha1,alpha2
    #[arg(long)]
    pub params: Option<String>,
    /// alpha0,alpha1,alpha2 with standard margins
    #[arg(long)]
    pub alpha: Option<String>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<Params7, CliError> {
        match (&self.params, &self.alpha) {
            (Some(p), _) => Ok(Params7::from_slice(&parse_list(p, 7, "--params")?)?),
            (_, Some(a)) => {
                let v = parse_list(a, 3, "--alpha")?;
                Ok(Params7::standard(Params3::new(v[0], v[1], v[2])?))
            }
            _ => Err(CliError::Usage("one of --params or --alpha is required".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct FitFlags {
    #[arg(long, default_value = "ac3_modified")]
    pub fitter: String,
    #[arg(long, default_value_t = 1e-5)]
    pub tol: f64,
    #[arg(long, default_value_t = 2000)]
    pub max_iter: usize,
    /// Gradient step on the scales (seven-parameter fitter).
    #[arg(long, default_value_t = 1e-3)]
    pub step_size: f64,
    /// Starting shapes; defaults depend on the fitter.
    #[arg(long)]
    pub init_alpha: Option<String>,
    /// Starting scales for the seven-parameter fitter.
    #[arg(long)]
    pub init_sigma: Option<String>,
}

impl FitFlags {
    fn resolve(&self) -> Result<(FitterId, FitConfig), CliError> {
        let fitter: FitterId = self.fitter.parse()?;
        let mut config = match fitter {
            FitterId::Ac7 => FitConfig::seven_param(),
            _ => FitConfig::default(),
        };
        config.tol = self.tol;
        config.max_iter = self.max_iter;
        config.step_size = self.step_size;
        if let Some(a) = &self.init_alpha {
            let v = parse_list(a, 3, "--init-alpha")?;
            config.init_alpha = Params3::new(v[0], v[1], v[2])?;
        }
        if let Some(s) = &self.init_sigma {
            let v = parse_list(s, 2, "--init-sigma")?;
            config.init_sigma = [v[0], v[1]];
        }
        config.validate()?;
        Ok((fitter, config))
    }
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub param: ParamArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "bvpac")]
    pub variant: Variant,
    #[arg(long)]
    pub seed: u64,
    /// Output CSV; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Input CSV with header x1,x2.
    pub data: PathBuf,
    #[command(flatten)]
    pub fit: FitFlags,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false, args = ["params", "alpha", "data"])]
pub struct BootstrapArgs {
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    /// Fit this CSV first and bootstrap around the estimate.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Size of each simulated sample; defaults to the row count of --data.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    pub b: usize,
    #[arg(long, default_value_t = 0.05)]
    pub gamma: f64,
    #[arg(long)]
    pub seed: u64,
    #[command(flatten)]
    pub fit: FitFlags,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PotArgs {
    pub data: PathBuf,
    #[arg(long, conflicts_with = "x0_1")]
    pub q1: Option<f64>,
    #[arg(long, conflicts_with = "x0_2")]
    pub q2: Option<f64>,
    #[arg(long = "x0-1")]
    pub x0_1: Option<f64>,
    #[arg(long = "x0-2")]
    pub x0_2: Option<f64>,
    /// Output CSV of rescaled exceedances.
    #[arg(long)]
    pub out: PathBuf,
    /// Threshold report; defaults to `<out>.report`.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[command(flatten)]
    pub param: ParamArgs,
    #[arg(long, default_value_t = 101)]
    pub grid_res: usize,
    /// lo,hi for x1; defaults to [mu1, mu1 + 5 sigma1].
    #[arg(long)]
    pub x1_range: Option<String>,
    #[arg(long)]
    pub x2_range: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    #[command(flatten)]
    pub param: ParamArgs,
    /// Comma-separated sample sizes.
    #[arg(long, default_value = "50,450")]
    pub sizes: String,
    #[arg(long, default_value_t = 200)]
    pub replications: usize,
    /// Bootstrap replicates per size for the interval columns; 0 skips them.
    #[arg(long, default_value_t = 200)]
    pub b: usize,
    #[arg(long, default_value_t = 0.05)]
    pub gamma: f64,
    #[arg(long)]
    pub seed: u64,
    #[command(flatten)]
    pub fit: FitFlags,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(bvpareto::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<bvpareto::Error> for CliError {
    fn from(e: bvpareto::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Lib(e.into())
    }
}

/// What a successful command wants the process to exit with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotConverged,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotConverged => 2,
        }
    }
}

fn parse_list(s: &str, len: usize, flag: &str) -> Result<Vec<f64>, CliError> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("{flag}: {e}")))?;
    if v.len() != len {
        return Err(CliError::Usage(format!("{flag} expects {len} values, got {}", v.len())));
    }
    Ok(v)
}

fn with_path(path: &Path, e: bvpareto::Error) -> CliError {
    match e {
        bvpareto::Error::Io(io) => CliError::Lib(bvpareto::Error::Domain(format!("{}: {io}", path.display()))),
        other => CliError::Lib(other),
    }
}

fn read(path: &Path) -> Result<bvpareto::BivariateSample, CliError> {
    read_csv(path).map_err(|e| with_path(path, e))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| with_path(path, e.into())),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Simulate(a) => simulate(a, stdout),
        Command::Fit(a) => fit(a, stdout),
        Command::Bootstrap(a) => bootstrap(a, stdout),
        Command::Pot(a) => pot(a),
        Command::Grid(a) => grid(a, stdout),
        Command::Study(a) => study(a, stdout),
    }
}

fn simulate(a: &SimulateArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let params = a.param.resolve()?;
    let sample = match a.variant {
        Variant::Bvpa => sample_bvpa(a.n, &params, a.seed)?,
        Variant::Bvpac => sample_bvpac(a.n, &params, a.seed)?,
    };
    match &a.out {
        Some(path) => write_csv(path, &sample).map_err(|e| with_path(path, e))?,
        None => write_csv_to(stdout, &sample)?,
    }
    Ok(Status::Ok)
}

fn fit(a: &FitArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (fitter, config) = a.fit.resolve()?;
    let data = read(&a.data)?;
    let report = fitter.fit(&data, &config)?;
    let summary = FitSummary::new(fitter, &report);
    emit(a.out.as_deref(), &summary.to_kv(), stdout)?;
    Ok(if summary.converged { Status::Ok } else { Status::NotConverged })
}

fn bootstrap_kv(fitter: FitterId, r: &BootstrapReport) -> String {
    let mut out = format!("fitter={fitter}\nreplicates={}\nfailures={}\n", r.replicates, r.failure_count);
    for s in &r.params {
        out.push_str(&format!(
            "{0}.point={1}\n{0}.mean={2}\n{0}.mse={3}\n{0}.lower={4}\n{0}.upper={5}\n",
            s.name, s.point, s.mean, s.mse, s.lower, s.upper
        ));
    }
    out
}

fn bootstrap(a: &BootstrapArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (fitter, config) = a.fit.resolve()?;
    let (point, data_n) = match &a.data {
        Some(path) => {
            let data = read(path)?;
            let report = fitter.fit(&data, &config)?;
            if !report.converged {
                return Err(CliError::Lib(bvpareto::Error::Domain(format!(
                    "fit of {} did not converge in {} iterations",
                    path.display(),
                    report.iterations
                ))));
            }
            (report.estimate, Some(data.len()))
        }
        None => {
            let p = ParamArgs { params: a.params.clone(), alpha: a.alpha.clone() };
            (p.resolve()?, None)
        }
    };
    let n = a.n.or(data_n).ok_or_else(|| CliError::Usage("--n is required without --data".into()))?;
    if n == 0 || a.b == 0 {
        return Err(CliError::Usage("--n and --b must be at least 1".into()));
    }
    let spec = BootstrapSpec {
        fit: config,
        gamma: a.gamma,
        ..BootstrapSpec::new(fitter, n, a.b, a.seed)
    };
    let report = parametric_bootstrap(&point, &spec)?;
    emit(a.out.as_deref(), &bootstrap_kv(fitter, &report), stdout)?;
    Ok(Status::Ok)
}

fn pot(a: &PotArgs) -> Result<Status, CliError> {
    use bvpareto::pot::{JointRule, Threshold};
    let pick = |q: Option<f64>, x0: Option<f64>, which: &str| match (q, x0) {
        (Some(q), None) => Ok(Threshold::Quantile(q)),
        (None, Some(x)) => Ok(Threshold::Absolute(x)),
        _ => Err(CliError::Usage(format!("give exactly one of --q{which} or --x0-{which}"))),
    };
    let config = PotConfig {
        first: pick(a.q1, a.x0_1, "1")?,
        second: pick(a.q2, a.x0_2, "2")?,
        joint_rule: JointRule::BothExceed,
    };
    let raw = read(&a.data)?;
    let out = pot_transform(&raw, &config)?;
    write_csv(&a.out, &out.sample).map_err(|e| with_path(&a.out, e))?;
    let report_path = a.report.clone().unwrap_or_else(|| {
        let mut p = a.out.clone().into_os_string();
        p.push(".report");
        PathBuf::from(p)
    });
    let text = format!("x0_1={}\nx0_2={}\nretained={}\n", out.x0_1, out.x0_2, out.retained);
    fs::write(&report_path, text).map_err(|e| with_path(&report_path, e.into()))?;
    Ok(Status::Ok)
}

fn grid(a: &GridArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let p = a.param.resolve()?;
    let range = |s: &Option<String>, mu: f64, sigma: f64, flag: &str| -> Result<(f64, f64), CliError> {
        match s {
            Some(s) => {
                let v = parse_list(s, 2, flag)?;
                Ok((v[0], v[1]))
            }
            None => Ok((mu, mu + 5.0 * sigma)),
        }
    };
    let spec = GridSpec {
        x1_range: range(&a.x1_range, p.mu1, p.sigma1, "--x1-range")?,
        x2_range: range(&a.x2_range, p.mu2, p.sigma2, "--x2-range")?,
        x1_resolution: a.grid_res,
        x2_resolution: a.grid_res,
    };
    let g = density_grid(&p, &spec)?;
    emit(a.out.as_deref(), &g.to_csv(), stdout)?;
    Ok(Status::Ok)
}

fn study(a: &StudyArgs, stdout: &mut dyn Write) -> Result<Status, CliError> {
    let (fitter, config) = a.fit.resolve()?;
    let truth = a.param.resolve()?;
    let sizes = a
        .sizes
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("--sizes: {e}")))?;
    let study = StudyConfig {
        fit: config,
        bootstrap_replicates: a.b,
        gamma: a.gamma,
        ..StudyConfig::new(fitter, truth, sizes, a.replications, a.seed)
    };
    let table = run_study(&study)?;
    emit(a.out.as_deref(), &table.to_csv(), stdout)?;
    Ok(Status::Ok)
}
