//! Ground truth: brute-force simple-path and cycle enumeration, closed-form
//! random-walk matrices and the pair equivalence relations built on them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tensor::{PathCountTensor, RwTensor, Tensor3};

/// Node cap for exhaustive path enumeration unless explicitly overridden.
pub const EXACT_NODE_CAP: usize = 20;

fn check_cap(g: &Graph, allow_large: bool) -> Result<()> {
    if !allow_large && g.node_count() > EXACT_NODE_CAP {
        return Err(Error::Refused {
            what: "exact path enumeration",
            actual: g.node_count(),
            limit: EXACT_NODE_CAP,
        });
    }
    Ok(())
}

fn check_k(k_max: usize) -> Result<()> {
    if k_max == 0 {
        return Err(Error::input("maximum length must be at least 1"));
    }
    Ok(())
}

/// Exact simple-path counts for every pair and length `1..=k_max`.
///
/// Refuses graphs above [`EXACT_NODE_CAP`] nodes.
pub fn exact_path_counts(g: &Graph, k_max: usize) -> Result<PathCountTensor> {
    exact_path_counts_with(g, k_max, false)
}

/// As [`exact_path_counts`], optionally lifting the node cap.
pub fn exact_path_counts_with(g: &Graph, k_max: usize, allow_large: bool) -> Result<PathCountTensor> {
    check_cap(g, allow_large)?;
    check_k(k_max)?;
    let n = g.node_count();
    let mut counts = Tensor3::<u64>::zeros(n, k_max);
    let mut saturated = false;
    for start in 0..n {
        enumerate_paths_from(g, start, k_max, |end, len| {
            let c = counts.get(start, end, len);
            if c == u64::MAX {
                saturated = true;
            }
            counts.set(start, end, len, c.saturating_add(1));
        });
    }
    Ok(PathCountTensor::from_counts(counts, saturated))
}

/// Calls `visit(end, length)` once per simple path from `start` with
/// `1 <= length <= k_max`.
fn enumerate_paths_from(g: &Graph, start: usize, k_max: usize, mut visit: impl FnMut(usize, usize)) {
    enumerate_simple_paths(g, start, k_max, |path| visit(path[path.len() - 1], path.len() - 1));
}

/// Calls `visit(path)` once per simple path starting at `start` with between
/// 1 and `k_max` edges. `path` lists the nodes, `start` first.
pub fn enumerate_simple_paths(g: &Graph, start: usize, k_max: usize, mut visit: impl FnMut(&[usize])) {
    let mut on_path = vec![false; g.node_count()];
    let mut path = vec![start];
    let mut cursor = vec![0usize];
    on_path[start] = true;
    while let Some(&next) = cursor.last() {
        let u = path[path.len() - 1];
        let nbrs = g.neighbors(u);
        if next == nbrs.len() || path.len() > k_max {
            on_path[u] = false;
            path.pop();
            cursor.pop();
            continue;
        }
        *cursor.last_mut().unwrap() += 1;
        let v = nbrs[next];
        if !on_path[v] {
            on_path[v] = true;
            path.push(v);
            cursor.push(0);
            visit(&path);
        }
    }
}

/// Number of simple paths of each length `1..=k_max` between `i` and `j`.
pub fn path_count_series(g: &Graph, i: usize, j: usize, k_max: usize) -> Result<Vec<u64>> {
    check_cap(g, false)?;
    check_k(k_max)?;
    g.check_node(i)?;
    g.check_node(j)?;
    let mut out = vec![0u64; k_max];
    enumerate_paths_from(g, i, k_max, |end, len| {
        if end == j {
            out[len - 1] += 1;
        }
    });
    Ok(out)
}

/// `(n-2)! / (n-k-1)!`: simple paths of length `k` between two nodes of `K_n`.
pub fn complete_graph_path_count(n: usize, k: usize) -> u64 {
    if n < 2 || k == 0 || k > n - 1 {
        return 0;
    }
    ((n - k)..=(n - 2)).map(|x| x as u64).product()
}

/// Transition matrix rows as sparse `(neighbor, probability)` lists.
fn transition_rows(g: &Graph) -> Vec<Vec<(usize, f64)>> {
    (0..g.node_count())
        .map(|u| {
            let d = g.degree(u) as f64;
            g.neighbors(u).iter().map(|&v| (v, 1.0 / d)).collect()
        })
        .collect()
}

/// Advances a row vector of landing probabilities by one step.
fn step(rows: &[Vec<(usize, f64)>], current: &[f64], next: &mut [f64]) {
    next.iter_mut().for_each(|x| *x = 0.0);
    for (u, &mass) in current.iter().enumerate() {
        if mass == 0.0 {
            continue;
        }
        for &(v, p) in &rows[u] {
            next[v] += mass * p;
        }
    }
}

/// Stack of `(D^-1 A)^k` for `k = 1..=k_max`. Isolated nodes have all-zero rows.
pub fn random_walk_tensor(g: &Graph, k_max: usize) -> Result<RwTensor> {
    check_k(k_max)?;
    let n = g.node_count();
    let rows = transition_rows(g);
    let mut out = RwTensor::zeros(n, k_max);
    let mut current = vec![0.0; n];
    let mut next = vec![0.0; n];
    for i in 0..n {
        current.iter_mut().for_each(|x| *x = 0.0);
        current[i] = 1.0;
        for k in 1..=k_max {
            step(&rows, &current, &mut next);
            std::mem::swap(&mut current, &mut next);
            for (j, &p) in current.iter().enumerate() {
                out.set(i, j, k, p);
            }
        }
    }
    Ok(out)
}

/// Landing probabilities from `i` to `j` for `k = 1..=k_max`.
pub fn landing_series(g: &Graph, i: usize, j: usize, k_max: usize) -> Result<Vec<f64>> {
    check_k(k_max)?;
    g.check_node(i)?;
    g.check_node(j)?;
    let rows = transition_rows(g);
    let mut current = vec![0.0; g.node_count()];
    let mut next = current.clone();
    current[i] = 1.0;
    let mut out = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        step(&rows, &current, &mut next);
        std::mem::swap(&mut current, &mut next);
        out.push(current[j]);
    }
    Ok(out)
}

/// Every simple cycle up to a length bound, enumerated once each.
///
/// A cycle is reported as a vertex sequence starting at its smallest vertex,
/// with the second vertex smaller than the last (fixing the direction).
#[derive(Debug, Clone)]
pub struct CycleCensus {
    max_len: usize,
    by_length: Vec<u64>,
    by_edge: HashMap<(usize, usize), Vec<u64>>,
}

impl CycleCensus {
    pub fn new(g: &Graph, max_len: usize) -> Self {
        let mut census = CycleCensus {
            max_len,
            by_length: vec![0; max_len + 1],
            by_edge: HashMap::new(),
        };
        for_each_cycle(g, max_len, |cycle| census.record(cycle));
        census
    }

    fn record(&mut self, cycle: &[usize]) {
        let len = cycle.len();
        self.by_length[len] += 1;
        for w in 0..len {
            let (a, b) = (cycle[w], cycle[(w + 1) % len]);
            let per_len = self
                .by_edge
                .entry((a.min(b), a.max(b)))
                .or_insert_with(|| vec![0; self.max_len + 1]);
            per_len[len] += 1;
        }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of simple cycles with exactly `len` edges.
    pub fn count(&self, len: usize) -> u64 {
        self.by_length.get(len).copied().unwrap_or(0)
    }

    /// Number of simple cycles of length `len` using edge `{i, j}`.
    pub fn through_edge(&self, i: usize, j: usize, len: usize) -> u64 {
        self.by_edge
            .get(&(i.min(j), i.max(j)))
            .and_then(|v| v.get(len).copied())
            .unwrap_or(0)
    }
}

/// Calls `visit` with each simple cycle of length `3..=max_len` exactly once.
pub fn for_each_cycle(g: &Graph, max_len: usize, mut visit: impl FnMut(&[usize])) {
    let n = g.node_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        let mut cursor = vec![0usize];
        while let Some(&next) = cursor.last() {
            let u = *path.last().unwrap();
            let nbrs = g.neighbors(u);
            if next == nbrs.len() {
                cursor.pop();
                on_path[u] = false;
                path.pop();
                continue;
            }
            *cursor.last_mut().unwrap() += 1;
            let v = nbrs[next];
            if v == s {
                if path.len() >= 3 && path[1] < u {
                    visit(&path);
                }
            } else if v > s && !on_path[v] && path.len() < max_len {
                on_path[v] = true;
                path.push(v);
                cursor.push(0);
            }
        }
    }
}

/// Number of distinct simple cycles of `length` edges that contain `{i, j}`.
pub fn cycles_through_edge(g: &Graph, i: usize, j: usize, length: usize) -> Result<u64> {
    check_cap(g, false)?;
    g.check_node(i)?;
    g.check_node(j)?;
    if !g.has_edge(i, j) {
        return Err(Error::input(format!("({i}, {j}) is not an edge")));
    }
    if length < 3 || length > g.node_count() {
        return Err(Error::input(format!(
            "cycle length {length} outside 3..={}",
            g.node_count()
        )));
    }
    Ok(CycleCensus::new(g, length).through_edge(i, j, length))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    /// Equal random-walk landing probabilities (within a tolerance).
    Rw,
    /// Equal simple-path counts.
    Sp,
}

/// Whether `(i, j)` in `g` and `(i2, j2)` in `g2` agree at every length up to
/// `k_max` under the chosen encoding.
pub fn pair_equivalent(
    g: &Graph,
    (i, j): (usize, usize),
    g2: &Graph,
    (i2, j2): (usize, usize),
    k_max: usize,
    mode: Equivalence,
    tol: f64,
) -> Result<bool> {
    match mode {
        Equivalence::Rw => {
            let a = landing_series(g, i, j, k_max)?;
            let b = landing_series(g2, i2, j2, k_max)?;
            Ok(a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol))
        }
        Equivalence::Sp => {
            Ok(path_count_series(g, i, j, k_max)? == path_count_series(g2, i2, j2, k_max)?)
        }
    }
}
