//! Node pairs that random walks cannot tell apart but simple paths can.

use spse::generate::{cycle, path};
use spse::oracle::{landing_series, path_count_series};

fn main() -> spse::Result<()> {
    // An 8-cycle and a 9-node path, compared around the path's center.
    let (ring, line) = (cycle(8)?, path(9)?);
    let walks_ring = landing_series(&ring, 0, 1, 6)?;
    let walks_line = landing_series(&line, 4, 5, 6)?;
    println!("C8 (0,1) walks {walks_ring:.4?}");
    println!("P9 (4,5) walks {walks_line:.4?}");
    println!("C8 (0,1) paths {:?}", path_count_series(&ring, 0, 1, 7)?);
    println!("P9 (4,5) paths {:?}", path_count_series(&line, 4, 5, 7)?);

    // Mirroring a graph around node 1 preserves walks between 0 and 1.
    let g = spse::Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])?;
    let m = g.mirror_around(1)?;
    println!("\ngraph {} nodes, mirror {} nodes", g.node_count(), m.node_count());
    println!("walks  {:.4?}", landing_series(&g, 0, 1, 4)?);
    println!("mirror {:.4?}", landing_series(&m, 0, 1, 4)?);
    println!("paths  {:?}", path_count_series(&g, 0, 1, 4)?);
    println!("mirror {:?}", path_count_series(&m, 0, 1, 4)?);
    Ok(())
}
