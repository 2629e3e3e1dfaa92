//! Flat `key=value` fit report.
//!
//! ```text
//! fitter=ac7
//! mu1=0.1003
//! ...
//! alpha2=0.61
//! iterations=412
//! converged=true
//! capped=false
//! q_final=-1282.86
//! warnings=one_wedge
//! ```
//!
//! Three-parameter fitters report standard margins (`mu = 0`, `sigma = 1`).
//! `warnings` is a comma-separated list and may be empty.

use std::collections::BTreeMap;

use bvpareto::em::{FitReport, FitWarning, FitterId};
use bvpareto::params::PARAM7_NAMES;
use bvpareto::Params7;

#[derive(Debug, Clone, PartialEq)]
pub struct FitSummary {
    pub fitter: FitterId,
    pub estimate: Params7,
    pub iterations: usize,
    pub converged: bool,
    pub capped: bool,
    pub q_final: f64,
    pub warnings: Vec<String>,
}

pub fn warning_name(w: &FitWarning) -> &'static str {
    match w {
        FitWarning::Boundary => "boundary",
        FitWarning::OneWedge => "one_wedge",
    }
}

impl FitSummary {
    pub fn new(fitter: FitterId, report: &FitReport<Params7>) -> Self {
        Self {
            fitter,
            estimate: report.estimate,
            iterations: report.iterations,
            converged: report.converged,
            capped: report.capped,
            q_final: report.q_final(),
            warnings: report.warnings.iter().map(|w| warning_name(w).to_string()).collect(),
        }
    }

    pub fn to_kv(&self) -> String {
        let mut out = format!("fitter={}\n", self.fitter);
        for (name, v) in PARAM7_NAMES.iter().zip(self.estimate.to_array()) {
            out.push_str(&format!("{name}={v}\n"));
        }
        out.push_str(&format!("iterations={}\n", self.iterations));
        out.push_str(&format!("converged={}\n", self.converged));
        out.push_str(&format!("capped={}\n", self.capped));
        out.push_str(&format!("q_final={}\n", self.q_final));
        out.push_str(&format!("warnings={}\n", self.warnings.join(",")));
        out
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let map = parse_kv(text)?;
        let get = |key: &str| map.get(key).ok_or_else(|| format!("missing key '{key}'"));
        let num = |key: &str| -> Result<f64, String> {
            get(key)?.parse().map_err(|e| format!("{key}: {e}"))
        };
        let flag = |key: &str| -> Result<bool, String> {
            get(key)?.parse().map_err(|e| format!("{key}: {e}"))
        };
        let values = PARAM7_NAMES.iter().map(|k| num(k)).collect::<Result<Vec<_>, _>>()?;
        let warnings = get("warnings")?;
        Ok(Self {
            fitter: get("fitter")?.parse().map_err(|e| format!("{e}"))?,
            estimate: Params7::from_slice(&values).map_err(|e| e.to_string())?,
            iterations: get("iterations")?.parse().map_err(|e| format!("iterations: {e}"))?,
            converged: flag("converged")?,
            capped: flag("capped")?,
            q_final: num("q_final")?,
            warnings: if warnings.is_empty() {
                Vec::new()
            } else {
                warnings.split(',').map(str::to_string).collect()
            },
        })
    }
}

/// Parses `key=value` lines; blank lines are skipped, duplicate keys rejected.
pub fn parse_kv(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(format!("line {}: duplicate key '{}'", i + 1, k.trim()));
        }
    }
    Ok(map)
}
