//! Hyperparameter sensitivity: vary one of R, N, D_dfs and measure how much
//! of a canonical configuration's path mass is recovered.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::counter::{count_paths, discovery_ratio, CountConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CSV_HEADER: &str = "param,value,mean_discovery_ratio,mean_time_per_sample_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepParam {
    R,
    N,
    #[serde(rename = "D_dfs")]
    Ddfs,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::R => "R",
            SweepParam::N => "N",
            SweepParam::Ddfs => "D_dfs",
        }
    }

    /// `base` with this parameter set to `value`.
    pub fn apply(self, base: &CountConfig, value: f64) -> Result<CountConfig> {
        let mut cfg = base.clone();
        match self {
            SweepParam::R => cfg.root_fraction = value,
            SweepParam::N | SweepParam::Ddfs => {
                if value < 0.0 || value.fract() != 0.0 {
                    return Err(Error::input(format!("{} must be a whole number, got {value}", self.name())));
                }
                if self == SweepParam::N {
                    cfg.trials = value as usize;
                } else {
                    cfg.dfs_depth = value as usize;
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(SweepParam::R),
            "N" | "n" => Ok(SweepParam::N),
            "D_dfs" | "D" | "d" | "dfs-depth" => Ok(SweepParam::Ddfs),
            _ => Err(Error::input(format!("unknown sweep parameter '{s}'; use R, N or D_dfs"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: f64,
    pub mean_discovery_ratio: f64,
    pub mean_time_per_sample_ms: f64,
}

/// For each value, counts every graph with `base` modified by `param` and
/// compares against `canonical`. Ratios are averaged over graphs; times are
/// the mean wall time of the tested configuration per graph.
pub fn sweep(
    graphs: &[Graph],
    base: &CountConfig,
    canonical: &CountConfig,
    param: SweepParam,
    values: &[f64],
) -> Result<Vec<SweepRow>> {
    if graphs.is_empty() {
        return Err(Error::input("sweep needs at least one graph"));
    }
    canonical.validate()?;
    // Tested configurations share the canonical length range.
    let base = CountConfig {
        k_max: canonical.k_max,
        ..base.clone()
    };
    let configs: Vec<CountConfig> = values.iter().map(|&v| param.apply(&base, v)).collect::<Result<_>>()?;
    let references = graphs
        .par_iter()
        .map(|g| count_paths(g, canonical).map(|r| r.tensor))
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::with_capacity(values.len());
    for (&value, cfg) in values.iter().zip(&configs) {
        let per_graph = graphs
            .par_iter()
            .zip(&references)
            .map(|(g, reference)| {
                let report = count_paths(g, cfg)?;
                let ratio = discovery_ratio(&report.tensor, reference)?;
                Ok((ratio, report.wall_time.as_secs_f64() * 1e3))
            })
            .collect::<Result<Vec<_>>>()?;
        let count = per_graph.len() as f64;
        rows.push(SweepRow {
            value,
            mean_discovery_ratio: per_graph.iter().map(|x| x.0).sum::<f64>() / count,
            mean_time_per_sample_ms: per_graph.iter().map(|x| x.1).sum::<f64>() / count,
        });
    }
    Ok(rows)
}

pub fn to_csv(param: SweepParam, rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            param.name(),
            r.value,
            r.mean_discovery_ratio,
            r.mean_time_per_sample_ms
        ));
    }
    out
}
