//! Approximate all-pairs simple-path counting by repeated DAG decomposition.
//!
//! Each node ordering orients the graph into a DAG. Every directed walk in a
//! DAG is a simple path, so powers of the oriented adjacency matrix count a
//! subset of the simple paths of the undirected graph. Counts from many
//! orderings are combined with an element-wise maximum, giving a lower bound
//! on the exact counts.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::{dag_decompose, PartialBfs};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeOrdering};
use crate::rng;
use crate::tensor::PathCountTensor;

const ROOT_STREAM: u64 = 0x5200_7500;
const UNIT_STREAM: u64 = 0x0D1A_6000;

/// Hyperparameters of the counting loop.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountConfig {
    /// Fraction of nodes used as traversal roots, in `(0, 1]`.
    #[serde(rename = "R")]
    pub root_fraction: f64,
    /// Longest path length counted.
    #[serde(rename = "K")]
    pub k_max: usize,
    /// DFS depths `0..=dfs_depth` are each tried.
    #[serde(rename = "D_dfs")]
    pub dfs_depth: usize,
    /// Orderings per (root, depth).
    #[serde(rename = "N")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub partial_bfs: PartialBfs,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            root_fraction: 1.0,
            k_max: 20,
            dfs_depth: 6,
            trials: 1,
            seed: 0,
            partial_bfs: PartialBfs::default(),
        }
    }
}

impl CountConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.root_fraction > 0.0 && self.root_fraction <= 1.0) {
            return Err(Error::input(format!(
                "root fraction {} outside (0, 1]",
                self.root_fraction
            )));
        }
        if self.k_max == 0 {
            return Err(Error::input("maximum length must be at least 1"));
        }
        if self.trials == 0 {
            return Err(Error::input("trial count must be at least 1"));
        }
        if let PartialBfs::Bernoulli { keep } = self.partial_bfs {
            if !(keep > 0.0 && keep <= 1.0) {
                return Err(Error::input(format!("partial BFS keep probability {keep} outside (0, 1]")));
            }
        }
        Ok(())
    }

    /// `ceil(R * n)`, at least one root for a non-empty graph.
    pub fn root_count(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        // Tolerate float noise such as 0.55 * 20 = 11.000000000000002.
        let exact = self.root_fraction * n as f64;
        ((exact - 1e-9).ceil() as usize).clamp(1, n)
    }

    /// Number of orderings processed for a graph with `n` nodes.
    pub fn dag_count(&self, n: usize) -> usize {
        self.root_count(n) * (self.dfs_depth + 1) * self.trials
    }
}

#[derive(Debug, Clone)]
pub struct CountReport {
    pub tensor: PathCountTensor,
    pub dag_count: usize,
    pub wall_time: Duration,
    pub saturated: bool,
}

/// Roots in selection order: a seeded permutation of all nodes, so a larger
/// root fraction always extends the same prefix.
pub fn select_roots(n: usize, cfg: &CountConfig) -> Vec<usize> {
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.shuffle(&mut rng::stream(cfg.seed, &[ROOT_STREAM, n as u64]));
    nodes.truncate(cfg.root_count(n));
    nodes
}

/// The ordering used for unit `(root, depth, trial)`.
pub fn unit_ordering(g: &Graph, cfg: &CountConfig, root: usize, depth: usize, trial: usize) -> NodeOrdering {
    let mut stream = rng::stream(
        cfg.seed,
        &[UNIT_STREAM, root as u64, depth as u64, trial as u64],
    );
    dag_decompose(g, root, depth, cfg.partial_bfs, &mut stream)
}

/// Counts of directed paths in the DAG induced by `ordering`, symmetrized,
/// max-merged into `acc`. Stops at the first zero power.
pub fn merge_dag_counts(g: &Graph, ordering: &NodeOrdering, acc: &mut PathCountTensor) {
    let n = g.node_count();
    let k_limit = acc.k_max().min(n.saturating_sub(1));
    if k_limit == 0 {
        return;
    }
    let rank = ordering.ranks();
    let perm = ordering.as_slice();
    // Arcs in rank space, grouped by source: a -> b with a < b.
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        let (a, b) = (rank[u].min(rank[v]), rank[u].max(rank[v]));
        succ[a].push(b);
    }

    // power[a * n + b] = number of directed paths a -> b of the current length.
    let mut power = vec![0u64; n * n];
    for (a, list) in succ.iter().enumerate() {
        for &b in list {
            power[a * n + b] = 1;
        }
    }
    let mut next = vec![0u64; n * n];
    let mut saturated = false;
    for k in 1..=k_limit {
        let mut any = false;
        {
            let counts = acc.counts_mut();
            for a in 0..n {
                let row = &power[a * n..(a + 1) * n];
                for (b, &c) in row.iter().enumerate().skip(a + 1) {
                    if c == 0 {
                        continue;
                    }
                    any = true;
                    let (i, j) = (perm[a], perm[b]);
                    if c > counts.get(i, j, k) {
                        counts.set(i, j, k, c);
                        counts.set(j, i, k, c);
                    }
                }
            }
        }
        if !any || k == k_limit {
            break;
        }
        next.iter_mut().for_each(|x| *x = 0);
        for a in 0..n {
            let row = &power[a * n..(a + 1) * n];
            let out = &mut next[a * n..(a + 1) * n];
            for (mid, &c) in row.iter().enumerate().skip(a + 1) {
                if c == 0 {
                    continue;
                }
                for &b in &succ[mid] {
                    let (sum, overflow) = out[b].overflowing_add(c);
                    if overflow {
                        saturated = true;
                        out[b] = u64::MAX;
                    } else {
                        out[b] = sum;
                    }
                }
            }
        }
        std::mem::swap(&mut power, &mut next);
    }
    if saturated {
        acc.mark_saturated();
    }
}

/// Max-merged path counts over an explicit list of orderings.
pub fn count_with_orderings(g: &Graph, orderings: &[NodeOrdering], k_max: usize) -> PathCountTensor {
    let mut acc = PathCountTensor::zeros(g.node_count(), k_max);
    for o in orderings {
        merge_dag_counts(g, o, &mut acc);
    }
    acc
}

/// Approximate simple-path counts for all pairs, lengths `1..=cfg.k_max`.
///
/// Work units `(root, depth, trial)` run on the current rayon pool; the result
/// does not depend on the number of workers.
pub fn count_paths(g: &Graph, cfg: &CountConfig) -> Result<CountReport> {
    cfg.validate()?;
    let started = Instant::now();
    let n = g.node_count();
    let roots = select_roots(n, cfg);
    let units: Vec<(usize, usize, usize)> = roots
        .iter()
        .flat_map(|&r| (0..=cfg.dfs_depth).flat_map(move |d| (0..cfg.trials).map(move |t| (r, d, t))))
        .collect();

    let tensor = units
        .par_iter()
        .fold(
            || PathCountTensor::zeros(n, cfg.k_max),
            |mut acc, &(root, depth, trial)| {
                let ordering = unit_ordering(g, cfg, root, depth, trial);
                merge_dag_counts(g, &ordering, &mut acc);
                acc
            },
        )
        .reduce(
            || PathCountTensor::zeros(n, cfg.k_max),
            |mut a, b| {
                a.merge_max(&b).expect("accumulators share a shape");
                a
            },
        );
    let saturated = tensor.saturated();
    Ok(CountReport {
        tensor,
        dag_count: units.len(),
        wall_time: started.elapsed(),
        saturated,
    })
}

/// Element-wise maximum of two count tensors.
pub fn merge_counts(a: &PathCountTensor, b: &PathCountTensor) -> Result<PathCountTensor> {
    let mut out = a.clone();
    out.merge_max(b)?;
    Ok(out)
}

/// Share of the reference path mass recovered by `test`, over pairs `i < j`
/// and all lengths: `sum min(test, ref) / sum ref`. Returns 1 for an all-zero
/// reference.
pub fn discovery_ratio(test: &PathCountTensor, reference: &PathCountTensor) -> Result<f64> {
    if test.n() != reference.n() || test.k_max() != reference.k_max() {
        return Err(Error::Shape(format!(
            "discovery ratio of {}x{} against {}x{}",
            test.n(),
            test.k_max(),
            reference.n(),
            reference.k_max()
        )));
    }
    let (mut found, mut total) = (0u128, 0u128);
    for i in 0..test.n() {
        for j in i + 1..test.n() {
            for (&t, &r) in test.series(i, j).iter().zip(reference.series(i, j)) {
                found += t.min(r) as u128;
                total += r as u128;
            }
        }
    }
    if total == 0 {
        return Ok(1.0);
    }
    Ok(found as f64 / total as f64)
}
