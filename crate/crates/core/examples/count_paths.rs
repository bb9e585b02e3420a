//! Approximate simple-path counts on a small ring molecule, compared with
//! exhaustive enumeration.

use spse::counter::CountConfig;
use spse::generate::molecule_like;
use spse::{count_paths, discovery_ratio, exact_path_counts, Preset};

fn main() -> spse::Result<()> {
    let g = molecule_like(18, 2, 3)?;
    println!("graph: {} nodes, {} edges", g.node_count(), g.edge_count());

    let (cfg, _) = Preset::Zinc.config(0);
    let exact = exact_path_counts(&g, cfg.k_max)?;
    let report = count_paths(&g, &cfg)?;
    println!(
        "zinc preset: {} DAGs in {:.2} ms, discovery ratio {:.4}",
        report.dag_count,
        report.wall_time.as_secs_f64() * 1e3,
        discovery_ratio(&report.tensor, &exact)?
    );

    let light = CountConfig {
        root_fraction: 0.25,
        dfs_depth: 1,
        ..cfg
    };
    let report = count_paths(&g, &light)?;
    println!(
        "R=0.25, D_dfs=1:  {} DAGs, discovery ratio {:.4}",
        report.dag_count,
        discovery_ratio(&report.tensor, &exact)?
    );

    let (i, j) = (0, g.neighbors(0)[0]);
    println!("pair ({i},{j}) exact       {:?}", &exact.series(i, j)[..10]);
    println!("pair ({i},{j}) approximate {:?}", &report.tensor.series(i, j)[..10]);
    Ok(())
}
