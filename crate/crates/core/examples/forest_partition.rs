//! Planar graphs with no 4-cycle split into a forest and a graph of
//! maximum degree at most 7.

use defekt::colouring::{edge_partition_forest_bounded, validate_edge_partition};
use defekt::corpus;

fn main() -> defekt::Result<()> {
    let mut rng = corpus::rng(9);
    for n in [10, 20, 40, 80] {
        let g = corpus::planar_no_c4(n, &mut rng);
        let p = edge_partition_forest_bounded(&g, 8)?;
        validate_edge_partition(&g, &p, 8)?;
        let mut deg = vec![0; n];
        for &(u, v) in &p.bounded {
            deg[u] += 1;
            deg[v] += 1;
        }
        println!(
            "n = {n:>3}, m = {:>3}: forest {:>3} edges, rest {:>3} edges with max degree {}",
            g.edge_count(),
            p.forest.len(),
            p.bounded.len(),
            deg.iter().max().unwrap_or(&0)
        );
    }
    Ok(())
}
