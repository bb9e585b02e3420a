//! Simple paths of length k along an edge close into cycles of length k+1
//! through that edge.

use spse::generate::erdos_renyi;
use spse::oracle::CycleCensus;
use spse::exact_path_counts;

fn main() -> spse::Result<()> {
    let g = erdos_renyi(9, 0.45, 11)?;
    let n = g.node_count();
    let paths = exact_path_counts(&g, n - 1)?;
    let census = CycleCensus::new(&g, n);
    println!("cycles by length: {:?}", (3..=n).map(|l| census.count(l)).collect::<Vec<_>>());
    for &(i, j) in g.edges().iter().take(5) {
        let s: Vec<u64> = (2..n).map(|k| paths.get(i, j, k)).collect();
        let c: Vec<u64> = (2..n).map(|k| census.through_edge(i, j, k + 1)).collect();
        println!("edge ({i},{j}): paths k=2.. {s:?}  cycles L=3.. {c:?}");
        assert_eq!(s, c);
    }
    Ok(())
}
