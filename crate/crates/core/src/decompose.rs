//! Randomized DFS / partial-BFS / BFS traversals producing node orderings.
//!
//! A traversal round from a start node runs three phases:
//!
//! 1. a randomized depth-first descent until the stack reaches `d_dfs` edges
//!    (or the reachable part is exhausted); neighbors not yet placed in the
//!    ordering are preferred over already-placed ones;
//! 2. a partial BFS step at the node where the descent stopped: each child not
//!    yet placed is kept independently with probability `keep`; children
//!    already placed are always passed through;
//! 3. breadth-first layers from the kept children until nothing new is found.
//!
//! Rounds repeat from the same start, passing through placed nodes without
//! re-appending them, until its component is placed; then the lowest-index
//! unplaced node becomes the next start. Children dropped by the partial step
//! stay unplaced for later rounds. After [`STALL_LIMIT`] consecutive rounds
//! that place nothing, a plain BFS round completes the component.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, NodeOrdering};
use crate::rng::StreamRng;

/// Behavior of the step between the DFS descent and the BFS layers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum PartialBfs {
    /// Keep each unplaced child independently with this probability.
    Bernoulli { keep: f64 },
    /// Keep every child: plain DFS followed by full BFS.
    Disabled,
}

impl Default for PartialBfs {
    fn default() -> Self {
        PartialBfs::Bernoulli { keep: 0.5 }
    }
}

struct Traversal<'g, 'r> {
    g: &'g Graph,
    rng: &'r mut StreamRng,
    placed: Vec<bool>,
    order: Vec<usize>,
    // Round-local state.
    seen: Vec<bool>,
    shuffled: Vec<Option<Vec<usize>>>,
}

impl Traversal<'_, '_> {
    fn neighbors(&mut self, u: usize) -> &[usize] {
        if self.shuffled[u].is_none() {
            let mut list = self.g.neighbors(u).to_vec();
            list.shuffle(self.rng);
            self.shuffled[u] = Some(list);
        }
        self.shuffled[u].as_deref().unwrap()
    }

    fn visit(&mut self, u: usize) {
        self.seen[u] = true;
        if !self.placed[u] {
            self.placed[u] = true;
            self.order.push(u);
        }
    }

    /// Next unseen neighbor of `u`, preferring unplaced ones.
    fn dfs_next(&mut self, u: usize) -> Option<usize> {
        let nbrs = self.neighbors(u).to_vec();
        let unseen = nbrs.iter().copied().filter(|&v| !self.seen[v]);
        let mut fallback = None;
        for v in unseen {
            if !self.placed[v] {
                return Some(v);
            }
            fallback.get_or_insert(v);
        }
        fallback
    }

    fn round(&mut self, start: usize, d_dfs: usize, partial: PartialBfs) {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.shuffled.iter_mut().for_each(|s| *s = None);
        self.visit(start);

        let mut stack = vec![start];
        let tip = loop {
            let Some(&top) = stack.last() else {
                break None;
            };
            if stack.len() - 1 == d_dfs {
                break Some(top);
            }
            match self.dfs_next(top) {
                Some(v) => {
                    self.visit(v);
                    stack.push(v);
                }
                None => {
                    stack.pop();
                }
            }
        };
        let Some(tip) = tip else {
            return;
        };

        let children: Vec<usize> = self.neighbors(tip).to_vec();
        let children: Vec<usize> = children.into_iter().filter(|&v| !self.seen[v]).collect();
        let mut kept: Vec<usize> = match partial {
            PartialBfs::Disabled => children,
            PartialBfs::Bernoulli { keep } => {
                let mut kept = Vec::with_capacity(children.len());
                for v in children {
                    if self.placed[v] || self.rng.gen_bool(keep) {
                        kept.push(v);
                    }
                }
                kept
            }
        };
        for &c in &kept {
            self.visit(c);
        }

        let mut next = Vec::new();
        while !kept.is_empty() {
            next.clear();
            for &u in &kept {
                let nbrs = self.neighbors(u).to_vec();
                for v in nbrs {
                    if !self.seen[v] {
                        self.visit(v);
                        next.push(v);
                    }
                }
            }
            std::mem::swap(&mut kept, &mut next);
        }
    }
}

/// Unproductive rounds tolerated before falling back to plain BFS.
pub const STALL_LIMIT: usize = 16;

/// Builds one node ordering rooted at `root` with DFS depth `d_dfs`.
pub fn dag_decompose(
    g: &Graph,
    root: usize,
    d_dfs: usize,
    partial: PartialBfs,
    rng: &mut StreamRng,
) -> NodeOrdering {
    let n = g.node_count();
    assert!(root < n, "root {root} out of range 0..{n}");
    let component = components(g);
    let mut remaining = vec![0usize; n];
    for &c in &component {
        remaining[c] += 1;
    }

    let mut t = Traversal {
        g,
        rng,
        placed: vec![false; n],
        order: Vec::with_capacity(n),
        seen: vec![false; n],
        shuffled: vec![None; n],
    };
    let mut start = root;
    let mut stalls = 0;
    while t.order.len() < n {
        if remaining[component[start]] == 0 {
            start = (0..n).find(|&u| !t.placed[u]).unwrap();
            stalls = 0;
        }
        let before = t.order.len();
        if stalls >= STALL_LIMIT {
            t.round(start, 0, PartialBfs::Disabled);
        } else {
            t.round(start, d_dfs, partial);
        }
        for &u in &t.order[before..] {
            remaining[component[u]] -= 1;
        }
        if t.order.len() == before {
            stalls += 1;
        } else {
            stalls = 0;
        }
    }
    NodeOrdering::from_trusted(t.order)
}

/// Connected-component id per node, numbered by lowest member.
pub fn components(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut comp = vec![usize::MAX; n];
    let mut next_id = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next_id;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if comp[v] == usize::MAX {
                    comp[v] = next_id;
                    stack.push(v);
                }
            }
        }
        next_id += 1;
    }
    comp
}
