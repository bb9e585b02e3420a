//! Synthetic cycle-counting dataset with labels exact by construction.
//!
//! Each graph receives a target count per cycle length, then cycles are added
//! one at a time. A new cycle either
//!
//! * fuses onto an existing edge `(u, v)`, adding a fresh path from `v` back
//!   to `u`, but only when every other `u`-`v` path is long enough that no
//!   combined cycle of a labeled length appears;
//! * shares a single existing node; or
//! * starts a new component.
//!
//! None of these moves creates an unintended cycle of a labeled length, so
//! the targets are the labels.

use std::collections::VecDeque;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{DatasetJson, GraphJson};
use crate::oracle::CycleCensus;
use crate::rng;

const SYNTH_STREAM: u64 = 0x5C7C_1E00;

/// Node bound under which label verification always runs.
pub const VERIFY_NODE_BUDGET: usize = 60;
/// Total labeled-cycle bound under which label verification always runs.
pub const VERIFY_CYCLE_BUDGET: u64 = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthParams {
    pub n_graphs: usize,
    /// Inclusive range of labeled cycle lengths.
    pub min_cycle_len: usize,
    pub max_cycle_len: usize,
    pub max_count_per_length: u32,
    /// Train / validation / test sizes, in index order.
    pub split: [usize; 3],
    pub seed: u64,
    /// Probability that a new cycle attaches to the existing graph at all.
    pub attach_prob: f64,
    /// Given attachment, probability of trying to fuse along an edge before
    /// falling back to sharing one node.
    pub fuse_edge_prob: f64,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams {
            n_graphs: 12_000,
            min_cycle_len: 3,
            max_cycle_len: 8,
            max_count_per_length: 14,
            split: [10_000, 1_000, 1_000],
            seed: 0,
            attach_prob: 0.98,
            fuse_edge_prob: 0.98,
        }
    }
}

impl SynthParams {
    /// Defaults with `n_graphs` split in the same 10:1:1 proportion.
    pub fn with_graphs(n_graphs: usize, seed: u64) -> Self {
        let val = n_graphs / 12;
        SynthParams {
            n_graphs,
            split: [n_graphs - 2 * val, val, val],
            seed,
            ..SynthParams::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.split.iter().sum::<usize>() != self.n_graphs {
            return Err(Error::input(format!(
                "split {:?} does not sum to {} graphs",
                self.split, self.n_graphs
            )));
        }
        if self.min_cycle_len < 3 || self.max_cycle_len < self.min_cycle_len {
            return Err(Error::input(format!(
                "invalid cycle length range {}..={}",
                self.min_cycle_len, self.max_cycle_len
            )));
        }
        for (name, p) in [("attach_prob", self.attach_prob), ("fuse_edge_prob", self.fuse_edge_prob)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input(format!("{name} {p} outside [0, 1]")));
            }
        }
        Ok(())
    }

    pub fn label_count(&self) -> usize {
        self.max_cycle_len - self.min_cycle_len + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Cycle counts for lengths `min_cycle_len..=max_cycle_len`.
    pub labels: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Val,
    Test,
}

#[derive(Debug, Clone)]
pub struct SynthDataset {
    pub params: SynthParams,
    pub graphs: Vec<LabeledGraph>,
}

impl SynthDataset {
    pub fn split_of(&self, index: usize) -> Split {
        let [train, val, _] = self.params.split;
        if index < train {
            Split::Train
        } else if index < train + val {
            Split::Val
        } else {
            Split::Test
        }
    }

    pub fn split_sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for i in 0..self.graphs.len() {
            sizes[self.split_of(i) as usize] += 1;
        }
        sizes
    }

    pub fn mean_nodes(&self) -> f64 {
        mean(self.graphs.iter().map(|g| g.graph.node_count()))
    }

    pub fn mean_edges(&self) -> f64 {
        mean(self.graphs.iter().map(|g| g.graph.edge_count()))
    }

    fn to_json(&self, range: std::ops::Range<usize>) -> DatasetJson {
        let graphs = &self.graphs[range];
        DatasetJson {
            graphs: graphs.iter().map(|g| GraphJson::from(&g.graph)).collect(),
            labels: Some(graphs.iter().map(|g| g.labels.clone()).collect()),
        }
    }

    pub fn manifest(&self) -> Manifest {
        Manifest {
            seed: self.params.seed,
            params: self.params.clone(),
            mean_nodes: self.mean_nodes(),
            mean_edges: self.mean_edges(),
        }
    }

    /// Writes `dataset.json`, `train.json`, `val.json`, `test.json` and
    /// `manifest.json` into `dir`.
    pub fn write_dir(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        let [train, val, _] = self.params.split;
        let n = self.graphs.len();
        let files = [
            ("dataset.json", 0..n),
            ("train.json", 0..train),
            ("val.json", train..train + val),
            ("test.json", train + val..n),
        ];
        for (name, range) in files {
            std::fs::write(dir.join(name), serde_json::to_string(&self.to_json(range))? + "\n")?;
        }
        std::fs::write(
            dir.join("manifest.json"),
            serde_json::to_string_pretty(&self.manifest())? + "\n",
        )?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub seed: u64,
    pub params: SynthParams,
    pub mean_nodes: f64,
    pub mean_edges: f64,
}

fn mean(values: impl Iterator<Item = usize>) -> f64 {
    let (sum, count) = values.fold((0usize, 0usize), |(s, c), v| (s + v, c + 1));
    if count == 0 {
        0.0
    } else {
        sum as f64 / count as f64
    }
}

struct Builder {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new_node(&mut self) -> usize {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edges.push((u, v));
    }

    /// Adds a path of `inner` fresh nodes from `from` to `to`.
    fn add_path(&mut self, from: usize, to: usize, inner: usize) {
        let mut prev = from;
        for _ in 0..inner {
            let x = self.new_node();
            self.link(prev, x);
            prev = x;
        }
        self.link(prev, to);
    }

    /// Whether some `u`-`v` path other than the edge itself has at most
    /// `limit` edges.
    fn has_short_detour(&self, u: usize, v: usize, limit: usize) -> bool {
        let mut dist = vec![usize::MAX; self.adjacency.len()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == limit {
                continue;
            }
            for &y in &self.adjacency[x] {
                if x == u && y == v {
                    continue;
                }
                if y == v {
                    return true;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

const FUSE_ATTEMPTS: usize = 8;

fn generate_one(p: &SynthParams, index: usize) -> LabeledGraph {
    let mut rng = rng::stream(p.seed, &[SYNTH_STREAM, index as u64]);
    let labels: Vec<u32> = (0..p.label_count())
        .map(|_| rng.gen_range(0..=p.max_count_per_length))
        .collect();
    let mut pending: Vec<usize> = labels
        .iter()
        .enumerate()
        .flat_map(|(i, &t)| std::iter::repeat_n(p.min_cycle_len + i, t as usize))
        .collect();
    pending.shuffle(&mut rng);

    let mut b = Builder {
        adjacency: Vec::new(),
        edges: Vec::new(),
    };
    for len in pending {
        let attach = !b.adjacency.is_empty() && rng.gen_bool(p.attach_prob);
        if !attach {
            let first = b.new_node();
            b.add_path(first, first, len - 1);
            continue;
        }
        if rng.gen_bool(p.fuse_edge_prob) {
            // Any other u-v path of length <= limit would close a labeled cycle.
            let limit = p.max_cycle_len + 1 - len;
            let fused = (0..FUSE_ATTEMPTS).find_map(|_| {
                let (u, v) = b.edges[rng.gen_range(0..b.edges.len())];
                (!b.has_short_detour(u, v, limit)).then_some((u, v))
            });
            if let Some((u, v)) = fused {
                b.add_path(v, u, len - 2);
                continue;
            }
        }
        let anchor = rng.gen_range(0..b.adjacency.len());
        b.add_path(anchor, anchor, len - 1);
    }
    let graph = Graph::from_edges(b.adjacency.len(), &b.edges).expect("builder emits a simple graph");
    LabeledGraph { graph, labels }
}

/// Generates the dataset; graph `i` depends only on `(seed, i)`.
pub fn generate_dataset(p: &SynthParams) -> Result<SynthDataset> {
    p.validate()?;
    let graphs = (0..p.n_graphs).into_par_iter().map(|i| generate_one(p, i)).collect();
    Ok(SynthDataset {
        params: p.clone(),
        graphs,
    })
}

/// Checks labels against brute-force cycle enumeration. Labels are assumed
/// to start at length 3.
///
/// Refuses graphs with more than [`VERIFY_NODE_BUDGET`] nodes whose labels
/// total more than [`VERIFY_CYCLE_BUDGET`].
pub fn verify_labels(lg: &LabeledGraph) -> Result<bool> {
    let total: u64 = lg.labels.iter().map(|&c| c as u64).sum();
    if lg.graph.node_count() > VERIFY_NODE_BUDGET && total > VERIFY_CYCLE_BUDGET {
        return Err(Error::Refused {
            what: "cycle enumeration (node count)",
            actual: lg.graph.node_count(),
            limit: VERIFY_NODE_BUDGET,
        });
    }
    let max_len = 2 + lg.labels.len();
    let census = CycleCensus::new(&lg.graph, max_len);
    Ok(lg
        .labels
        .iter()
        .enumerate()
        .all(|(i, &c)| census.count(i + 3) == c as u64))
}
