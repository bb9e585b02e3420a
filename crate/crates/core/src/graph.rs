//! Undirected simple graphs, node orderings and their DAG orientations.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Graphs above this size never get a dense adjacency matrix.
pub const DENSE_LIMIT: usize = 512;

/// Undirected simple graph on nodes `0..node_count`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Neighbor lists are
/// sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate edges.
    ///
    /// Self-loops and endpoints outside `0..node_count` are rejected.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{node_count}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop on node {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            node_count,
            edges,
            adjacency,
        })
    }

    pub fn empty(node_count: usize) -> Self {
        Graph {
            node_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); node_count],
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Dense row-major 0/1 adjacency matrix. Refuses above [`DENSE_LIMIT`] nodes.
    pub fn dense_adjacency(&self) -> Result<Vec<u8>> {
        if self.node_count > DENSE_LIMIT {
            return Err(Error::Refused {
                what: "dense adjacency",
                actual: self.node_count,
                limit: DENSE_LIMIT,
            });
        }
        let n = self.node_count;
        let mut a = vec![0u8; n * n];
        for &(u, v) in &self.edges {
            a[u * n + v] = 1;
            a[v * n + u] = 1;
        }
        Ok(a)
    }

    pub(crate) fn check_node(&self, u: usize) -> Result<()> {
        if u >= self.node_count {
            return Err(Error::input(format!(
                "node {u} out of range 0..{}",
                self.node_count
            )));
        }
        Ok(())
    }

    /// BFS distances from `root`; unreachable nodes are `None`.
    pub fn bfs_distances(&self, root: usize) -> Result<Vec<Option<usize>>> {
        self.check_node(root)?;
        let mut dist = vec![None; self.node_count];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Largest BFS distance from `root` to any node in its component.
    pub fn eccentricity(&self, root: usize) -> Result<usize> {
        Ok(self
            .bfs_distances(root)?
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0))
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        self.bfs_distances(0)
            .map(|d| d.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    /// Mirrors the graph through `center`.
    ///
    /// Every node `i != center` gets a copy `i'` at index `n + rank(i)`, where
    /// `rank` counts non-center nodes below `i`. Edges away from the center are
    /// duplicated among the copies; each center edge `(center, j)` also yields
    /// `(center, j')`. The center keeps its random-walk landing probabilities
    /// seen from any original node, while its degree doubles.
    pub fn mirror_around(&self, center: usize) -> Result<Graph> {
        self.check_node(center)?;
        let n = self.node_count;
        let mirror = |i: usize| -> usize {
            if i == center {
                center
            } else if i < center {
                n + i
            } else {
                n + i - 1
            }
        };
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for &(u, v) in &self.edges {
            edges.push((u, v));
            edges.push((mirror(u), mirror(v)));
        }
        Graph::from_edges(2 * n - 1, &edges)
    }
}

/// A permutation of node indices; `perm[r]` is the node with rank `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeOrdering {
    perm: Vec<usize>,
}

impl NodeOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &u in &perm {
            if u >= perm.len() || std::mem::replace(&mut seen[u], true) {
                return Err(Error::input(format!(
                    "ordering is not a permutation of 0..{}",
                    perm.len()
                )));
            }
        }
        Ok(NodeOrdering { perm })
    }

    pub fn identity(n: usize) -> Self {
        NodeOrdering {
            perm: (0..n).collect(),
        }
    }

    pub(crate) fn from_trusted(perm: Vec<usize>) -> Self {
        debug_assert!(NodeOrdering::new(perm.clone()).is_ok());
        NodeOrdering { perm }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.perm
    }

    /// Inverse permutation: `ranks()[u]` is the position of node `u`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.perm.len()];
        for (r, &u) in self.perm.iter().enumerate() {
            rank[u] = r;
        }
        rank
    }
}

/// Directed graph produced by orienting an undirected one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    node_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Arcs `(from, to)`, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }
}

/// Orients every edge toward the endpoint of higher rank under `ordering`.
pub fn dag_orient(g: &Graph, ordering: &NodeOrdering) -> Result<DirectedGraph> {
    if ordering.len() != g.node_count() {
        return Err(Error::input(format!(
            "ordering has {} entries for a graph with {} nodes",
            ordering.len(),
            g.node_count()
        )));
    }
    let rank = ordering.ranks();
    let mut arcs: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| if rank[u] < rank[v] { (u, v) } else { (v, u) })
        .collect();
    arcs.sort_unstable();
    Ok(DirectedGraph {
        node_count: g.node_count(),
        arcs,
    })
}
