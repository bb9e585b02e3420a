//! Acceptance checks. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; the process fails if any check does.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use spse::counter::CountConfig;
use spse::generate::{complete, connected_er, cycle, erdos_renyi, molecule_like, path, random_tree};
use spse::orientation::{best_single_dag_count, find_blind_spot};
use spse::sweep::{sweep, SweepParam};
use spse::synth::{generate_dataset, verify_labels, SynthParams};
use spse::tensor_file::{encode, TensorData};
use spse::verify::blind_spot_grid;
use spse::{
    count_paths, cycles_through_edge, encode_spse, exact_path_counts, random_walk_tensor, rng, EncodingParams, Graph,
    PartialBfs, PathCountTensor, Preset, Tensor3,
};

use common::{brute_paths, complete_count, dense_walks, distances};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn case_rng(criterion: u64, case: u64) -> spse::rng::StreamRng {
    rng::stream(0x00AC_CE97, &[criterion, case])
}

fn path_cycle_correspondence() -> Outcome {
    let started = Instant::now();
    let mut checks = 0u64;
    for case in 0..100u64 {
        let mut r = case_rng(1, case);
        let n = r.gen_range(3..=12);
        let p = if case % 2 == 0 { 0.2 } else { 0.4 };
        let g = erdos_renyi(n, p, r.gen()).map_err(|e| e.to_string())?;
        let s = exact_path_counts(&g, n - 1).map_err(|e| e.to_string())?;
        for &(i, j) in g.edges() {
            for k in 2..n {
                let c = cycles_through_edge(&g, i, j, k + 1).map_err(|e| e.to_string())?;
                ensure!(s.get(i, j, k) == c, "case {case} edge ({i},{j}) k={k}: {} paths vs {c} cycles", s.get(i, j, k));
                checks += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{checks} edge/length checks in {:.2}s", elapsed.as_secs_f64()))
}

fn even_cycle_vs_odd_path() -> Outcome {
    let k = 20;
    let mut max_dev = 0.0f64;
    for n in 2..=8 {
        let ring = random_walk_tensor(&cycle(2 * n).unwrap(), k).unwrap();
        let line = random_walk_tensor(&path(2 * n + 1).unwrap(), k).unwrap();
        let center = n;
        for step in 1..=k {
            for j in 0..n {
                max_dev = max_dev.max((ring.get(0, j, step) - line.get(center, center + j, step)).abs());
            }
            let antipodal = ring.get(0, n, step);
            max_dev = max_dev.max((antipodal - 2.0 * line.get(center, 2 * n, step)).abs());
            max_dev = max_dev.max((antipodal - line.get(2 * n, center, step)).abs());
        }
    }
    ensure!(max_dev <= 1e-12, "max deviation {max_dev:e}");
    Ok(format!("n=2..8, K=20, max deviation {max_dev:e}"))
}

fn mirror_construction() -> Outcome {
    let k = 20;
    let mut max_dev = 0.0f64;
    for case in 0..50u64 {
        let mut r = case_rng(3, case);
        let n = r.gen_range(2..=10);
        let g = connected_er(n, r.gen_range(0.1..0.7), r.gen()).unwrap();
        let m = g.mirror_around(1).unwrap();
        ensure!(m.node_count() == 2 * n - 1 && m.node_count() != n, "case {case}: {} nodes", m.node_count());
        let a = random_walk_tensor(&g, k).unwrap();
        let b = random_walk_tensor(&m, k).unwrap();
        // Cross-check the library walks against dense matrix powers.
        let dense = dense_walks(&m, k);
        for step in 1..=k {
            max_dev = max_dev.max((a.get(0, 1, step) - b.get(0, 1, step)).abs());
            max_dev = max_dev.max((b.get(0, 1, step) - dense[step - 1][0][1]).abs());
        }
    }
    ensure!(max_dev <= 1e-12, "max deviation {max_dev:e}");
    Ok(format!("50 graphs, K=20, max deviation {max_dev:e}"))
}

fn random_config(r: &mut impl Rng) -> CountConfig {
    CountConfig {
        root_fraction: [0.1, 0.3, 0.6, 1.0][r.gen_range(0..4)],
        k_max: r.gen_range(1..=8),
        dfs_depth: r.gen_range(0..=5),
        trials: r.gen_range(1..=4),
        seed: r.gen(),
        partial_bfs: if r.gen_bool(0.8) { PartialBfs::default() } else { PartialBfs::Disabled },
    }
}

fn lower_bound_and_edge_slice() -> Outcome {
    let mut entries = 0u64;
    for case in 0..200u64 {
        let mut r = case_rng(4, case);
        let n = r.gen_range(2..=14);
        let g = erdos_renyi(n, [0.15, 0.3, 0.5][case as usize % 3], r.gen()).unwrap();
        let cfg = random_config(&mut r);
        let approx = count_paths(&g, &cfg).unwrap().tensor;
        let exact = brute_paths(&g, cfg.k_max);
        for i in 0..n {
            for j in 0..n {
                ensure!(
                    approx.get(i, j, 1) == u64::from(g.has_edge(i, j)),
                    "case {case}: slice 1 at ({i},{j}) is {}",
                    approx.get(i, j, 1)
                );
                for k in 1..=cfg.k_max {
                    ensure!(
                        approx.get(i, j, k) <= exact[i][j][k - 1],
                        "case {case} ({i},{j}) k={k}: {} > {}",
                        approx.get(i, j, k),
                        exact[i][j][k - 1]
                    );
                    entries += 1;
                }
            }
        }
    }
    Ok(format!("200 graphs, {entries} entries bounded"))
}

fn tree_and_cycle_exactness() -> Outcome {
    let mut trees = 0;
    for (idx, n) in [2usize, 3, 7, 20, 60, 120, 200].into_iter().enumerate() {
        for seed in 0..3u64 {
            let t = random_tree(n, seed * 31 + idx as u64).unwrap();
            let k_max = (n - 1).clamp(1, 40);
            let cfg = CountConfig {
                root_fraction: 1.0,
                k_max,
                dfs_depth: 0,
                trials: 1,
                seed,
                ..CountConfig::default()
            };
            let got = count_paths(&t, &cfg).unwrap().tensor;
            for i in 0..n {
                let dist = distances(&t, i);
                for j in 0..n {
                    for k in 1..=k_max {
                        let want = u64::from(dist[j] == Some(k));
                        ensure!(got.get(i, j, k) == want, "tree n={n} seed {seed} ({i},{j}) k={k}");
                    }
                }
            }
            trees += 1;
        }
    }
    let mut cycles = 0;
    for m in 3..=50 {
        let c = cycle(m).unwrap();
        let cfg = CountConfig {
            root_fraction: 1.0,
            k_max: m - 1,
            dfs_depth: 2,
            trials: 16,
            seed: m as u64,
            ..CountConfig::default()
        };
        let got = count_paths(&c, &cfg).unwrap().tensor;
        for i in 0..m {
            for j in 0..m {
                let d = (i + m - j) % m;
                for k in 1..m {
                    let want = if i == j { 0 } else { u64::from(k == d) + u64::from(k == m - d) };
                    ensure!(got.get(i, j, k) == want, "C{m} ({i},{j}) k={k}: {} vs {want}", got.get(i, j, k));
                }
            }
        }
        cycles += 1;
    }
    Ok(format!("{trees} trees up to 200 nodes, {cycles} cycles C3..C50"))
}

fn hexagon_edge() -> Outcome {
    let c6 = cycle(6).unwrap();
    let want = [1, 0, 0, 0, 1, 0];
    let exact = exact_path_counts(&c6, 6).unwrap();
    let cfg = CountConfig {
        root_fraction: 1.0,
        k_max: 6,
        dfs_depth: 2,
        trials: 8,
        ..CountConfig::default()
    };
    let approx = count_paths(&c6, &cfg).unwrap().tensor;
    ensure!(exact.series(0, 1) == want, "exact {:?}", exact.series(0, 1));
    ensure!(approx.series(0, 1) == want, "approximate {:?}", approx.series(0, 1));
    Ok(format!("(0,1) series {want:?}"))
}

fn complete_graph_bound() -> Outcome {
    for n in 2..=8 {
        let g = complete(n).unwrap();
        let exact = exact_path_counts(&g, n - 1).unwrap();
        let mut r = case_rng(7, n as u64);
        let configs: Vec<CountConfig> = (0..6)
            .map(|_| CountConfig {
                k_max: n - 1,
                ..random_config(&mut r)
            })
            .collect();
        let approx: Vec<PathCountTensor> = configs.iter().map(|c| count_paths(&g, c).unwrap().tensor).collect();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for k in 1..n {
                    let bound = complete_count(n, k);
                    ensure!(exact.get(i, j, k) == bound, "K{n} k={k}: exact {} vs {bound}", exact.get(i, j, k));
                    for a in &approx {
                        ensure!(a.get(i, j, k) <= bound, "K{n} k={k}: approx {} > {bound}", a.get(i, j, k));
                    }
                }
            }
        }
    }
    Ok("K2..K8 exact equals (n-2)!/(n-k-1)!, approximations within".into())
}

fn orientation_blind_spot() -> Outcome {
    let spot = find_blind_spot(4, 8, 4, 200)
        .map_err(|e| e.to_string())?
        .ok_or("no instance found")?;
    let (i, j) = spot.pair;
    let brute = brute_paths(&spot.graph, 4);
    ensure!(brute[i][j][3] == 2, "brute force finds {} paths", brute[i][j][3]);
    let ceiling = best_single_dag_count(&spot.graph, i, j, 4).unwrap();
    ensure!(ceiling <= 1, "some DAG carries {ceiling} paths");
    let grid = blind_spot_grid(11);
    ensure!(grid.len() == 20, "grid has {} configs", grid.len());
    let mut found = Vec::new();
    for cfg in &grid {
        let c = count_paths(&spot.graph, cfg).unwrap().tensor.get(i, j, 4);
        ensure!(c <= 1, "config {cfg:?} found {c}");
        found.push(c);
    }
    Ok(format!(
        "{} nodes, edges {:?}, pair ({i},{j}): exact 2, best DAG {ceiling}, grid max {}",
        spot.graph.node_count(),
        spot.graph.edges(),
        found.iter().max().unwrap()
    ))
}

fn sensitivity_monotone() -> Outcome {
    let graphs: Vec<Graph> = (0..100).map(|s| molecule_like(23, 3, 1000 + s).unwrap()).collect();
    let density: f64 = graphs
        .iter()
        .map(|g| 2.0 * g.edge_count() as f64 / (23.0 * 22.0))
        .sum::<f64>()
        / 100.0;
    ensure!((0.08..=0.12).contains(&density), "mean density {density}");
    let canonical = CountConfig {
        root_fraction: 1.0,
        k_max: 20,
        dfs_depth: 8,
        trials: 8,
        seed: 5,
        ..CountConfig::default()
    };
    let base = CountConfig {
        root_fraction: 0.5,
        dfs_depth: 2,
        trials: 2,
        ..canonical.clone()
    };
    let sweeps = [
        (SweepParam::R, vec![0.1, 0.25, 0.5, 0.75, 1.0]),
        (SweepParam::N, vec![1.0, 2.0, 4.0, 8.0]),
        (SweepParam::Ddfs, vec![0.0, 1.0, 2.0, 4.0, 6.0, 8.0]),
    ];
    let mut summary = Vec::new();
    for (param, values) in sweeps {
        let rows = sweep(&graphs, &base, &canonical, param, &values).map_err(|e| e.to_string())?;
        let ratios: Vec<f64> = rows.iter().map(|r| r.mean_discovery_ratio).collect();
        for w in ratios.windows(2) {
            ensure!(w[1] >= w[0], "{param} curve decreases: {ratios:?}");
        }
        ensure!(ratios.last() >= ratios.first(), "{param} ends below its start");
        summary.push(format!("{param} {:.3}->{:.3}", ratios[0], ratios[ratios.len() - 1]));
    }
    Ok(format!("density {density:.3}; {}", summary.join(", ")))
}

/// High-precision values of `alpha * ln(1 + .)^n (x) + beta` for
/// x in {0, 1, 10, 1e6, 2^64 - 1}, computed with 50-digit arithmetic.
const ENCODING_REFERENCE: [(&str, [f64; 5]); 7] = [
    ("zinc", [0.0, 0.34657359027997265471, 1.198947636399185272, 6.9077557789818870522, 22.180709777918249901]),
    ("pattern", [-0.2, -0.11539282856711959668, -0.040214420188522499359, 0.061432627717191128819, 0.1143331671968660342]),
    ("cluster", [-0.2, -0.11539282856711959668, -0.040214420188522499359, 0.061432627717191128819, 0.1143331671968660342]),
    ("mnist", [-0.2, -0.11539282856711959668, -0.040214420188522499359, 0.061432627717191128819, 0.1143331671968660342]),
    ("cifar10", [-0.2, -0.11539282856711959668, -0.040214420188522499359, 0.061432627717191128819, 0.1143331671968660342]),
    ("peptides", [-0.2, -0.094682193172191108877, 0.044631240505420585859, 0.3391349420320648674, 0.56293239085049651021]),
    ("pcqm4mv2", [0.0, 0.34657359027997265471, 1.198947636399185272, 6.9077557789818870522, 22.180709777918249901]),
];

fn encoding_values() -> Outcome {
    let counts = [0, 1, 10, 1_000_000, u64::MAX];
    let mut t = Tensor3::<u64>::zeros(1, counts.len());
    for (k, &c) in counts.iter().enumerate() {
        t.set(0, 0, k + 1, c);
    }
    let tensor = PathCountTensor::from_counts(t, false);
    let mut max_dev = 0.0f64;
    for (name, want) in ENCODING_REFERENCE {
        let preset: Preset = name.parse().unwrap();
        let params: EncodingParams = preset.config(0).1;
        let got = encode_spse(&tensor, &params);
        ensure!(got.get(0, 0, 1) == params.beta, "{name}: f(0) = {} not beta", got.get(0, 0, 1));
        for (k, &w) in want.iter().enumerate() {
            let dev = (got.get(0, 0, k + 1) - w).abs();
            max_dev = max_dev.max(dev);
            ensure!(dev <= 1e-12, "{name} x={}: {} vs {w}", counts[k], got.get(0, 0, k + 1));
        }
    }
    Ok(format!("35 values, max deviation {max_dev:e}, f(0) = beta exactly"))
}

fn synthetic_dataset() -> Outcome {
    let data = generate_dataset(&SynthParams::with_graphs(1000, 2024)).unwrap();
    let (nodes, edges) = (data.mean_nodes(), data.mean_edges());
    ensure!((112.0..=186.0).contains(&nodes), "mean nodes {nodes}");
    ensure!((143.0..=238.0).contains(&edges), "mean edges {edges}");

    let small = SynthParams {
        max_count_per_length: 2,
        ..SynthParams::with_graphs(20, 7)
    };
    let small = generate_dataset(&small).unwrap();
    for (i, lg) in small.graphs.iter().enumerate() {
        ensure!(verify_labels(lg).unwrap(), "small graph {i} mislabeled");
    }

    let full = generate_dataset(&SynthParams::with_graphs(12_000, 1)).unwrap();
    ensure!(full.split_sizes() == [10_000, 1_000, 1_000], "splits {:?}", full.split_sizes());
    Ok(format!(
        "mean nodes {nodes:.1}, mean edges {edges:.1}; 20 labels verified; splits 10000/1000/1000"
    ))
}

fn performance_envelope() -> Outcome {
    let g = molecule_like(23, 3, 42).unwrap();
    ensure!(g.node_count() == 23 && g.edge_count() == 25, "graph is {}/{}", g.node_count(), g.edge_count());
    let (cfg, _) = Preset::Zinc.config(0);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let started = Instant::now();
            let report = count_paths(&g, &cfg).unwrap();
            (started.elapsed(), encode(&TensorData::Counts(report.tensor.into_counts())))
        })
    };
    let (single, bytes_1) = run(1);
    let (_, bytes_8) = run(8);
    ensure!(single <= Duration::from_secs(1), "single-threaded run took {single:?}");
    ensure!(bytes_1 == bytes_8, "1 vs 8 workers differ");
    Ok(format!(
        "{:.1} ms single-threaded, {} identical bytes for 1 and 8 workers",
        single.as_secs_f64() * 1e3,
        bytes_1.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("paths along an edge equal cycles through it", path_cycle_correspondence),
        ("even cycle and odd path share walk probabilities", even_cycle_vs_odd_path),
        ("mirror graph shares walk probabilities", mirror_construction),
        ("approximate counts are lower bounds; slice 1 is adjacency", lower_bound_and_edge_slice),
        ("trees and cycles are counted exactly", tree_and_cycle_exactness),
        ("hexagon edge counts", hexagon_edge),
        ("complete-graph path counts", complete_graph_bound),
        ("orientation blind spot stays undercounted", orientation_blind_spot),
        ("discovery ratio rises with R, N and D_dfs", sensitivity_monotone),
        ("count encoding against high-precision values", encoding_values),
        ("synthetic cycle-counting dataset", synthetic_dataset),
        ("molecule-sized counting time and determinism", performance_envelope),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.2}s]: {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{secs:.2}s]: {detail}", idx + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
