//! Count compression `f(x) = alpha * g^n(x) + beta` with `g(x) = ln(1 + x)`,
//! the random-walk baseline stack, and per-dataset presets.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::counter::CountConfig;
use crate::decompose::PartialBfs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::tensor::{EncodedTensor, PathCountTensor, RwTensor};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EncodingParams {
    pub alpha: f64,
    pub beta: f64,
    /// How many times `ln(1 + x)` is composed.
    #[serde(rename = "n")]
    pub log_depth: u32,
}

impl EncodingParams {
    pub fn new(alpha: f64, beta: f64, log_depth: u32) -> Result<Self> {
        let p = EncodingParams {
            alpha,
            beta,
            log_depth,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.log_depth == 0 {
            return Err(Error::input("log depth must be at least 1"));
        }
        if !self.alpha.is_finite() || !self.beta.is_finite() {
            return Err(Error::input("alpha and beta must be finite"));
        }
        Ok(())
    }

    /// Maps a single (non-negative) count.
    #[inline]
    pub fn apply(&self, x: f64) -> f64 {
        let mut y = x;
        for _ in 0..self.log_depth {
            y = y.ln_1p();
        }
        self.alpha * y + self.beta
    }
}

/// Applies the count map entry-wise. Counts above 2^53 are rounded to the
/// nearest double before the logarithm.
pub fn encode_spse(counts: &PathCountTensor, params: &EncodingParams) -> EncodedTensor {
    counts.counts().map(|c| params.apply(c as f64))
}

/// Random-walk structural encoding: the stack `P_1 .. P_K`.
pub fn encode_rwse(g: &Graph, k_max: usize) -> Result<RwTensor> {
    oracle::random_walk_tensor(g, k_max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Zinc,
    Pattern,
    Cluster,
    Mnist,
    Cifar10,
    Peptides,
    Pcqm4mv2,
}

impl Preset {
    pub const ALL: [Preset; 7] = [
        Preset::Zinc,
        Preset::Pattern,
        Preset::Cluster,
        Preset::Mnist,
        Preset::Cifar10,
        Preset::Peptides,
        Preset::Pcqm4mv2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Zinc => "zinc",
            Preset::Pattern => "pattern",
            Preset::Cluster => "cluster",
            Preset::Mnist => "mnist",
            Preset::Cifar10 => "cifar10",
            Preset::Peptides => "peptides",
            Preset::Pcqm4mv2 => "pcqm4mv2",
        }
    }

    /// Counting and encoding parameters tuned per benchmark collection.
    pub fn values(self) -> PresetValues {
        let (r, k, d, n, alpha, beta, log_n) = match self {
            Preset::Zinc => (1.0, 20, 6, 1, 0.5, 0.0, 1),
            Preset::Pattern => (0.4, 16, 2, 7, 0.2, -0.2, 3),
            Preset::Cluster => (0.4, 16, 2, 7, 0.2, -0.2, 3),
            Preset::Mnist => (0.55, 17, 11, 2, 0.2, -0.2, 3),
            Preset::Cifar10 => (0.55, 17, 11, 2, 0.2, -0.2, 3),
            Preset::Peptides => (1.0, 23, 4, 1, 0.2, -0.2, 2),
            Preset::Pcqm4mv2 => (1.0, 15, 6, 1, 0.5, 0.0, 1),
        };
        PresetValues {
            root_fraction: r,
            k_max: k,
            dfs_depth: d,
            trials: n,
            alpha,
            beta,
            log_depth: log_n,
        }
    }

    pub fn config(self, seed: u64) -> (CountConfig, EncodingParams) {
        self.values().split(seed)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| {
                let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
                Error::input(format!("unknown preset '{s}'; valid presets: {}", names.join(", ")))
            })
    }
}

/// Flat preset record, also the JSON override file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresetValues {
    #[serde(rename = "R")]
    pub root_fraction: f64,
    #[serde(rename = "K")]
    pub k_max: usize,
    #[serde(rename = "D_dfs")]
    pub dfs_depth: usize,
    #[serde(rename = "N")]
    pub trials: usize,
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "n")]
    pub log_depth: u32,
}

impl PresetValues {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let values: PresetValues = serde_json::from_str(&text)?;
        let (cfg, params) = values.split(0);
        cfg.validate()?;
        params.validate()?;
        Ok(values)
    }

    pub fn split(&self, seed: u64) -> (CountConfig, EncodingParams) {
        (
            CountConfig {
                root_fraction: self.root_fraction,
                k_max: self.k_max,
                dfs_depth: self.dfs_depth,
                trials: self.trials,
                seed,
                partial_bfs: PartialBfs::default(),
            },
            EncodingParams {
                alpha: self.alpha,
                beta: self.beta,
                log_depth: self.log_depth,
            },
        )
    }
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<(CountConfig, EncodingParams)> {
    Ok(name.parse::<Preset>()?.config(0))
}
