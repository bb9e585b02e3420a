//! Where DAG decompositions help and where they cannot.
//!
//! On a skip-link ring, the two length-3 paths between nodes 0 and 1 only
//! fit into one traversal if the first BFS step skips the other endpoint.
//! On the second graph, two length-4 paths cross each other and no acyclic
//! orientation holds both, so the counter stays below the exact value.

use spse::counter::count_with_orderings;
use spse::oracle::path_count_series;
use spse::orientation::{best_single_dag_count, find_blind_spot};
use spse::verify::{blind_spot_grid, partial_bfs_instance};
use spse::{count_paths, dag_decompose, rng, PartialBfs};

fn main() -> spse::Result<()> {
    let g = partial_bfs_instance();
    println!("skip-link ring: exact length-3 paths (0,1) = {}", path_count_series(&g, 0, 1, 3)?[2]);
    for (name, mode) in [("plain BFS", PartialBfs::Disabled), ("partial BFS", PartialBfs::default())] {
        let mut both = 0;
        for seed in 0..500 {
            let o = dag_decompose(&g, 0, 0, mode, &mut rng::stream(seed, &[]));
            if count_with_orderings(&g, &[o], 3).get(0, 1, 3) == 2 {
                both += 1;
            }
        }
        println!("  {name:<11} from node 0: both paths in {both} of 500 orderings");
    }

    let spot = find_blind_spot(4, 8, 4, 200)?.expect("a small instance exists");
    let (i, j) = spot.pair;
    println!("\ncrossing paths: edges {:?}, pair ({i},{j})", spot.graph.edges());
    println!("  exact length-4 paths {}", spot.exact);
    println!("  best single DAG      {}", best_single_dag_count(&spot.graph, i, j, 4)?);
    let found: Vec<u64> = blind_spot_grid(0)
        .iter()
        .map(|cfg| count_paths(&spot.graph, cfg).map(|r| r.tensor.get(i, j, 4)))
        .collect::<spse::Result<_>>()?;
    println!("  counter over 20 configurations {found:?}");
    Ok(())
}
