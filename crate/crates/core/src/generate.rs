//! Deterministic graph families used as fixtures and sweep inputs.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Cycle { m: usize },
    Complete { n: usize },
    /// `n` nodes in total: center 0 and leaves `1..n`.
    Star { n: usize },
    Er { n: usize, p: f64 },
    /// Uniform random labeled tree (Prüfer decoding).
    Tree { n: usize },
    /// Circular skip-link graph: a ring plus chords `i -- i + skip`.
    Csl { n: usize, skip: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Star { .. } => "star",
            Family::Er { .. } => "er",
            Family::Tree { .. } => "tree",
            Family::Csl { .. } => "csl",
        }
    }
}

/// Builds a member of `family`. Only `er` and `tree` consume `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    match *family {
        Family::Path { n } => path(n),
        Family::Cycle { m } => cycle(m),
        Family::Complete { n } => complete(n),
        Family::Star { n } => {
            if n == 0 {
                return Err(Error::input("star needs at least one node"));
            }
            let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Er { n, p } => erdos_renyi(n, p, seed),
        Family::Tree { n } => random_tree(n, seed),
        Family::Csl { n, skip } => {
            if skip < 2 || 2 * skip >= n {
                return Err(Error::input(format!(
                    "csl skip must satisfy 2 <= skip < n/2, got n={n} skip={skip}"
                )));
            }
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n).map(|i| (i, (i + skip) % n)));
            Graph::from_edges(n, &edges)
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::input(format!("cycle needs at least 3 nodes, got {m}")));
    }
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Graph::from_edges(m, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(n, &edges)
}

pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng::stream(seed, &[0xE4]);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n <= 2 {
        return path(n);
    }
    let mut rng = rng::stream(seed, &[0x73EE]);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &prufer {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&u| degree[u] == 1).collect();
    for &x in &prufer {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<_> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

/// Random spanning tree plus independent extra edges with probability `p`.
/// Always connected.
pub fn connected_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let tree = random_tree(n, seed)?;
    let extra = erdos_renyi(n, p, rng::derive_seed(seed, &[1]))?;
    let edges: Vec<_> = tree.edges().iter().chain(extra.edges()).copied().collect();
    Graph::from_edges(n, &edges)
}

/// Sparse ring-bearing graph in the style of small molecules: a random tree
/// with `rings` extra edges, each closing a cycle of length 5 or 6 where
/// possible.
pub fn molecule_like(n: usize, rings: usize, seed: u64) -> Result<Graph> {
    let tree = random_tree(n, seed)?;
    let mut rng = rng::stream(seed, &[0x30_1E]);
    let mut edges = tree.edges().to_vec();
    let mut g = tree;
    let mut nodes: Vec<usize> = (0..n).collect();
    let mut added = 0;
    for _ in 0..rings * 50 {
        if added == rings {
            break;
        }
        nodes.shuffle(&mut rng);
        let u = nodes[0];
        let dist = g.bfs_distances(u)?;
        let target = rng.gen_range(4..=5);
        let candidates: Vec<usize> = (0..n).filter(|&v| dist[v] == Some(target)).collect();
        if let Some(&v) = candidates.choose(&mut rng) {
            edges.push((u, v));
            g = Graph::from_edges(n, &edges)?;
            added += 1;
        }
    }
    Ok(g)
}
