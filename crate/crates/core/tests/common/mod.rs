//! Brute-force references shared by the integration tests. They only use
//! the graph's neighbor lists, never the library's own oracles.

#![allow(dead_code)]

use std::collections::VecDeque;

use spse::Graph;

/// `counts[i][j][k - 1]` = simple paths of length `k` from `i` to `j`.
pub fn brute_paths(g: &Graph, k_max: usize) -> Vec<Vec<Vec<u64>>> {
    let n = g.node_count();
    let mut counts = vec![vec![vec![0u64; k_max]; n]; n];
    let mut on_path = vec![false; n];
    fn extend(g: &Graph, start: usize, u: usize, len: usize, k_max: usize, on_path: &mut [bool], counts: &mut [Vec<Vec<u64>>]) {
        if len > 0 {
            counts[start][u][len - 1] += 1;
        }
        if len == k_max {
            return;
        }
        on_path[u] = true;
        for &v in g.neighbors(u) {
            if !on_path[v] {
                extend(g, start, v, len + 1, k_max, on_path, counts);
            }
        }
        on_path[u] = false;
    }
    for s in 0..n {
        extend(g, s, s, 0, k_max, &mut on_path, &mut counts);
    }
    counts
}

/// `probs[k - 1]` = dense `(D^-1 A)^k`, isolated nodes giving zero rows.
pub fn dense_walks(g: &Graph, k_max: usize) -> Vec<Vec<Vec<f64>>> {
    let n = g.node_count();
    let mut step = vec![vec![0.0; n]; n];
    for u in 0..n {
        let d = g.neighbors(u).len();
        for &v in g.neighbors(u) {
            step[u][v] = 1.0 / d as f64;
        }
    }
    let mut out = vec![step.clone()];
    for _ in 1..k_max {
        let prev = out.last().unwrap();
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for m in 0..n {
                if prev[i][m] != 0.0 {
                    for j in 0..n {
                        next[i][j] += prev[i][m] * step[m][j];
                    }
                }
            }
        }
        out.push(next);
    }
    out
}

pub fn distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

/// Whether the arcs admit a topological order (Kahn's algorithm).
pub fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
        indeg[v] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&u| indeg[u] == 0).collect();
    let mut seen = 0;
    while let Some(u) = ready.pop() {
        seen += 1;
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(v);
            }
        }
    }
    seen == n
}

/// `(n - 2)! / (n - k - 1)!`, the number of length-`k` paths between two
/// nodes of a complete graph on `n` nodes.
pub fn complete_count(n: usize, k: usize) -> u64 {
    if k == 0 || k >= n {
        return 0;
    }
    (n - k..=n - 2).map(|x| x as u64).product()
}
