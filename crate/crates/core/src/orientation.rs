//! What a single acyclic orientation can and cannot see.
//!
//! Max-merging per-DAG counts can never exceed the best count any single DAG
//! achieves for an entry. Enumerating every acyclic orientation gives that
//! ceiling exactly for small graphs, which exposes pairs whose paths can only
//! be counted one at a time.

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;
use crate::oracle::{enumerate_simple_paths, path_count_series};

/// Largest edge count accepted by [`best_single_dag_count`].
pub const ORIENTATION_EDGE_CAP: usize = 20;

/// Maximum over all acyclic orientations of the number of directed
/// length-`k` paths between `i` and `j` (either direction).
pub fn best_single_dag_count(g: &Graph, i: usize, j: usize, k: usize) -> Result<u64> {
    g.check_node(i)?;
    g.check_node(j)?;
    let m = g.edge_count();
    if m > ORIENTATION_EDGE_CAP {
        return Err(Error::Refused {
            what: "orientation enumeration (edges)",
            actual: m,
            limit: ORIENTATION_EDGE_CAP,
        });
    }
    let n = g.node_count();
    let mut best = 0;
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for mask in 0u32..(1u32 << m) {
        out.iter_mut().for_each(Vec::clear);
        for (bit, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> bit & 1 == 1 {
                out[v].push(u);
            } else {
                out[u].push(v);
            }
        }
        if !is_acyclic(&out) {
            continue;
        }
        let count = directed_paths(&out, i, j, k) + directed_paths(&out, j, i, k);
        best = best.max(count);
    }
    Ok(best)
}

fn is_acyclic(out: &[Vec<usize>]) -> bool {
    let n = out.len();
    let mut indegree = vec![0usize; n];
    for list in out {
        for &v in list {
            indegree[v] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&u| indegree[u] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        removed += 1;
        for &v in &out[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(v);
            }
        }
    }
    removed == n
}

/// Directed walks of exactly `k` arcs from `s` to `t`; in a DAG these are paths.
fn directed_paths(out: &[Vec<usize>], s: usize, t: usize, k: usize) -> u64 {
    let mut ways = vec![0u64; out.len()];
    ways[s] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; out.len()];
        for (u, &w) in ways.iter().enumerate() {
            if w > 0 {
                for &v in &out[u] {
                    next[v] += w;
                }
            }
        }
        ways = next;
    }
    ways[t]
}

/// A graph and pair with exactly two simple paths of some length that no
/// single acyclic orientation carries together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlindSpot {
    pub graph: Graph,
    pub pair: (usize, usize),
    pub length: usize,
    pub exact: u64,
    pub best_single_dag: u64,
}

/// Scans seeded connected graphs of `min_nodes..=max_nodes` for a pair with
/// exactly two simple paths of `length` whose union is cyclic when both are
/// directed from one endpoint to the other, then confirms with
/// [`best_single_dag_count`].
pub fn find_blind_spot(
    min_nodes: usize,
    max_nodes: usize,
    length: usize,
    seeds: u64,
) -> Result<Option<BlindSpot>> {
    for n in min_nodes..=max_nodes {
        for seed in 0..seeds {
            let p = 0.25 + 0.05 * (seed % 6) as f64;
            let g = generate::connected_er(n, p, seed)?;
            if g.edge_count() > ORIENTATION_EDGE_CAP {
                continue;
            }
            for i in 0..n {
                for j in i + 1..n {
                    if path_count_series(&g, i, j, length)?[length - 1] != 2 {
                        continue;
                    }
                    let mut paths = Vec::new();
                    enumerate_simple_paths(&g, i, length, |path| {
                        if path.len() == length + 1 && path[length] == j {
                            paths.push(path.to_vec());
                        }
                    });
                    if !union_is_cyclic(n, &paths) {
                        continue;
                    }
                    let best = best_single_dag_count(&g, i, j, length)?;
                    if best < 2 {
                        return Ok(Some(BlindSpot {
                            graph: g,
                            pair: (i, j),
                            length,
                            exact: 2,
                            best_single_dag: best,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn union_is_cyclic(n: usize, paths: &[Vec<usize>]) -> bool {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in paths {
        for w in p.windows(2) {
            if !out[w[0]].contains(&w[1]) {
                out[w[0]].push(w[1]);
            }
        }
    }
    !is_acyclic(&out)
}
