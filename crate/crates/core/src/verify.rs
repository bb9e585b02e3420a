//! Runnable property suites with machine-readable reports.
//!
//! Each suite checks one claim about random walks, simple paths or the
//! approximate counter against an independent brute-force oracle.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::counter::{count_paths, count_with_orderings, CountConfig};
use crate::decompose::{dag_decompose, PartialBfs};
use crate::error::{Error, Result};
use crate::generate::{self, Family};
use crate::graph::Graph;
use crate::oracle::{exact_path_counts, landing_series, path_count_series, CycleCensus};
use crate::orientation::find_blind_spot;
use crate::rng;

const CASE_STREAM: u64 = 0x7E51_F000;
const MAX_REPORTED_FAILURES: usize = 20;
/// Walk lengths compared by the random-walk suites.
pub const WALK_LENGTH: usize = 20;
pub const WALK_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Even cycles and odd paths share landing probabilities.
    CyclePath,
    /// A graph and its mirror share landing probabilities on (0, 1).
    Mirror,
    /// Simple paths along an edge close into cycles through it.
    PathCycle,
    /// Approximate counts never exceed exact counts; slice 1 is adjacency.
    LowerBound,
    /// The partial BFS step reaches paths plain BFS cannot.
    PartialStep,
    /// Some path pairs never fit into one DAG.
    BlindSpot,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CyclePath,
        Suite::Mirror,
        Suite::PathCycle,
        Suite::LowerBound,
        Suite::PartialStep,
        Suite::BlindSpot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CyclePath => "1",
            Suite::Mirror => "2",
            Suite::PathCycle => "3",
            Suite::LowerBound => "lower-bound",
            Suite::PartialStep => "fig3",
            Suite::BlindSpot => "fig6",
        }
    }

    pub fn default_cases(self) -> usize {
        match self {
            Suite::CyclePath => 7,
            Suite::Mirror => 50,
            Suite::PathCycle => 100,
            Suite::LowerBound => 200,
            Suite::PartialStep => 500,
            Suite::BlindSpot => 20,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::input(format!("unknown suite '{s}'; valid suites: {}", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub seed: u64,
    pub cases: usize,
    pub checks: u64,
    /// Largest absolute difference seen by floating-point comparisons.
    pub max_deviation: f64,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

struct Tally {
    checks: u64,
    max_deviation: f64,
    failure_count: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            max_deviation: 0.0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn close(&mut self, a: f64, b: f64, describe: impl FnOnce() -> String) {
        let dev = (a - b).abs();
        self.max_deviation = self.max_deviation.max(dev);
        self.check(dev <= WALK_TOLERANCE, || format!("{}: {a} vs {b}", describe()));
    }

    fn report(self, suite: Suite, seed: u64, cases: usize, details: serde_json::Value) -> SuiteReport {
        let mut failures = self.failures;
        if self.failure_count > failures.len() {
            failures.push(format!("... {} more", self.failure_count - failures.len()));
        }
        SuiteReport {
            suite: suite.name().to_string(),
            passed: self.failure_count == 0,
            seed,
            cases,
            checks: self.checks,
            max_deviation: self.max_deviation,
            failures,
            details,
        }
    }
}

/// Runs `suite` on `cases` seeded instances (suite default when `None`).
pub fn run_suite(suite: Suite, seed: u64, cases: Option<usize>) -> Result<SuiteReport> {
    let cases = cases.unwrap_or(suite.default_cases());
    match suite {
        Suite::CyclePath => cycle_path(seed, cases),
        Suite::Mirror => mirror(seed, cases),
        Suite::PathCycle => path_cycle(seed, cases),
        Suite::LowerBound => lower_bound(seed, cases),
        Suite::PartialStep => partial_step(seed, cases),
        Suite::BlindSpot => blind_spot(seed, cases),
    }
}

/// `C_{2n}` against `P_{2n+1}` for `n = 2..2 + cases`. A cycle pair at
/// distance `j < n` matches the path pair `(n, n + j)` around the center.
/// The antipodal pair matches twice the center-to-end probability and
/// exactly the end-to-center probability.
fn cycle_path(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for n in 2..2 + cases {
        let ring = generate::cycle(2 * n)?;
        let line = generate::path(2 * n + 1)?;
        for j in 0..n {
            let a = landing_series(&ring, 0, j, WALK_LENGTH)?;
            let b = landing_series(&line, n, n + j, WALK_LENGTH)?;
            for k in 0..WALK_LENGTH {
                t.close(a[k], b[k], || format!("n={n} j={j} k={}", k + 1));
            }
        }
        let a = landing_series(&ring, 0, n, WALK_LENGTH)?;
        let to_end = landing_series(&line, n, 2 * n, WALK_LENGTH)?;
        let from_end = landing_series(&line, 2 * n, n, WALK_LENGTH)?;
        for k in 0..WALK_LENGTH {
            t.close(a[k], 2.0 * to_end[k], || format!("n={n} antipodal k={}", k + 1));
            t.close(a[k], from_end[k], || format!("n={n} antipodal reversed k={}", k + 1));
        }
    }
    Ok(t.report(Suite::CyclePath, seed, cases, serde_json::Value::Null))
}

/// Seeded connected graphs on 2..=10 nodes against their mirror around 1.
fn mirror(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for case in 0..cases {
        let mut r = rng::stream(seed, &[CASE_STREAM, 2, case as u64]);
        let n = r.gen_range(2..=10);
        let p = r.gen_range(0.1..0.7);
        let g = generate::connected_er(n, p, r.gen())?;
        let m = g.mirror_around(1)?;
        t.check(m.node_count() == 2 * n - 1 && m.node_count() != n, || {
            format!("case {case}: mirror has {} nodes", m.node_count())
        });
        let a = landing_series(&g, 0, 1, WALK_LENGTH)?;
        let b = landing_series(&m, 0, 1, WALK_LENGTH)?;
        for k in 0..WALK_LENGTH {
            t.close(a[k], b[k], || format!("case {case} n={n} k={}", k + 1));
        }
    }
    Ok(t.report(Suite::Mirror, seed, cases, serde_json::Value::Null))
}

/// Seeded Erdős–Rényi graphs on at most 12 nodes: for every edge and every
/// length `2 <= k <= n-1`, paths of length `k` equal cycles of length `k+1`
/// through the edge.
fn path_cycle(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for case in 0..cases {
        let mut r = rng::stream(seed, &[CASE_STREAM, 3, case as u64]);
        let n = r.gen_range(3..=12);
        let p = if case % 2 == 0 { 0.2 } else { 0.4 };
        let g = generate::erdos_renyi(n, p, r.gen())?;
        let paths = exact_path_counts(&g, n - 1)?;
        let census = CycleCensus::new(&g, n);
        for &(i, j) in g.edges() {
            for k in 2..n {
                let (s, c) = (paths.get(i, j, k), census.through_edge(i, j, k + 1));
                t.check(s == c, || format!("case {case} edge ({i},{j}) k={k}: {s} paths, {c} cycles"));
            }
        }
    }
    Ok(t.report(Suite::PathCycle, seed, cases, serde_json::Value::Null))
}

/// Random graphs and random configurations: approximate counts are a
/// pointwise lower bound on exact counts and slice 1 equals adjacency.
fn lower_bound(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    for case in 0..cases {
        let mut r = rng::stream(seed, &[CASE_STREAM, 4, case as u64]);
        let n = r.gen_range(2..=14);
        let p = [0.15, 0.3, 0.5][case % 3];
        let g = generate::erdos_renyi(n, p, r.gen())?;
        let cfg = CountConfig {
            root_fraction: [0.2, 0.5, 1.0][r.gen_range(0..3)],
            k_max: r.gen_range(1..=8),
            dfs_depth: r.gen_range(0..=4),
            trials: r.gen_range(1..=4),
            seed: r.gen(),
            partial_bfs: if r.gen_bool(0.8) {
                PartialBfs::default()
            } else {
                PartialBfs::Disabled
            },
        };
        let approx = count_paths(&g, &cfg)?.tensor;
        let exact = exact_path_counts(&g, cfg.k_max)?;
        for i in 0..n {
            for j in 0..n {
                let adj = u64::from(g.has_edge(i, j));
                t.check(approx.get(i, j, 1) == adj, || {
                    format!("case {case} ({i},{j}) slice 1 = {}", approx.get(i, j, 1))
                });
                for k in 1..=cfg.k_max {
                    let (a, e) = (approx.get(i, j, k), exact.get(i, j, k));
                    t.check(a <= e, || format!("case {case} ({i},{j}) k={k}: {a} > exact {e}"));
                }
            }
        }
    }
    Ok(t.report(Suite::LowerBound, seed, cases, serde_json::Value::Null))
}

/// The skip-link instance used by the partial BFS suite: a ring of 11
/// nodes with chords of offset 2, where nodes 0 and 1 are joined by exactly
/// two simple paths of length 3.
pub fn partial_bfs_instance() -> Graph {
    generate::generate(&Family::Csl { n: 11, skip: 2 }, 0).expect("valid skip-link parameters")
}

/// Traversals rooted at either endpoint with no DFS descent. Plain BFS
/// places the other endpoint in the first layer, before the middle of either
/// path, so it can never carry both paths; partial BFS can skip it.
fn partial_step(seed: u64, cases: usize) -> Result<SuiteReport> {
    let g = partial_bfs_instance();
    let (i, j, len) = (0, 1, 3);
    let mut t = Tally::new();
    let exact = path_count_series(&g, i, j, len)?[len - 1];
    t.check(exact == 2, || format!("expected 2 paths of length 3, found {exact}"));
    let mut first_hit = None;
    let mut hits = 0usize;
    for case in 0..cases {
        let s = rng::derive_seed(seed, &[CASE_STREAM, 6, case as u64]);
        for root in [i, j] {
            let count_with = |mode| {
                let o = dag_decompose(&g, root, 0, mode, &mut rng::stream(s, &[root as u64]));
                count_with_orderings(&g, &[o], len).get(i, j, len)
            };
            let plain = count_with(PartialBfs::Disabled);
            t.check(plain <= 1, || format!("case {case} root {root}: plain BFS found {plain}"));
            if count_with(PartialBfs::default()) == 2 {
                hits += 1;
                first_hit.get_or_insert(json!({ "case": case, "root": root }));
            }
        }
    }
    t.check(hits > 0, || format!("partial BFS never found both paths in {cases} cases"));
    let details = json!({
        "graph": "csl(11, 2)",
        "pair": [i, j],
        "length": len,
        "exact": exact,
        "partial_hits": hits,
        "trials": 2 * cases,
        "first_hit": first_hit,
    });
    Ok(t.report(Suite::PartialStep, seed, cases, details))
}

/// The configuration grid used against the orientation blind spot.
pub fn blind_spot_grid(seed: u64) -> Vec<CountConfig> {
    let mut grid = Vec::new();
    for (idx, &(r, d, n)) in [0.5, 1.0]
        .iter()
        .flat_map(|&r| [0, 1, 2, 4, 8].into_iter().flat_map(move |d| [(r, d, 1), (r, d, 16)]))
        .collect::<Vec<_>>()
        .iter()
        .enumerate()
    {
        grid.push(CountConfig {
            root_fraction: r,
            k_max: 4,
            dfs_depth: d,
            trials: n,
            seed: rng::derive_seed(seed, &[CASE_STREAM, 7, idx as u64]),
            partial_bfs: PartialBfs::default(),
        });
    }
    grid
}

/// Locates a pair with two length-4 paths that no acyclic orientation
/// carries together, then checks the counter stays at most 1 there for
/// every configuration of a grid. `cases` caps the grid size.
fn blind_spot(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let Some(spot) = find_blind_spot(4, 8, 4, 200)? else {
        t.check(false, || "no blind spot found on graphs with at most 8 nodes".into());
        return Ok(t.report(Suite::BlindSpot, seed, 0, serde_json::Value::Null));
    };
    let (i, j) = spot.pair;
    let grid = blind_spot_grid(seed);
    let used = cases.min(grid.len());
    let mut counts = Vec::new();
    for cfg in &grid[..used] {
        let c = count_paths(&spot.graph, cfg)?.tensor.get(i, j, spot.length);
        t.check(c <= 1 && c < spot.exact, || format!("config {cfg:?} found {c}"));
        counts.push(c);
    }
    let details = json!({
        "nodes": spot.graph.node_count(),
        "edges": spot.graph.edges(),
        "pair": [i, j],
        "length": spot.length,
        "exact": spot.exact,
        "best_single_dag": spot.best_single_dag,
        "counts": counts,
    });
    Ok(t.report(Suite::BlindSpot, seed, used, details))
}
