//! Exhaustive minor tests, tree-depth, vertex cover and the resulting
//! bounds on the defective chromatic number of `H`-minor-free graphs.

use defekt::bounds::hfree_bounds;
use defekt::caps::Caps;
use defekt::structure::{minor_test_bruteforce, tree_depth, validate_minor_model, vertex_cover_number};
use defekt::{gadgets, Graph};

fn main() -> defekt::Result<()> {
    let caps = Caps::default();
    let p = Graph::petersen();
    let k5 = Graph::complete(5);
    if let Some(model) = minor_test_bruteforce(&p, &k5, &caps)? {
        validate_minor_model(&p, &k5, &model)?;
        println!("Petersen has a K_5 minor: {:?}", model.branch_sets);
    }
    let g = gadgets::gen_gsn(3, 2, 100)?;
    println!(
        "G(3,2) has a K_3,3 minor: {}",
        minor_test_bruteforce(&g, &Graph::complete_bipartite(3, 3), &caps)?.is_some()
    );

    println!("\npattern        td  tau  bounds");
    let patterns = [
        ("P_7", Graph::path(7)),
        ("K_4", Graph::complete(4)),
        ("K_2,3", Graph::complete_bipartite(2, 3)),
        ("K_1,4", Graph::star(4)),
        ("petersen", p.clone()),
    ];
    for (name, h) in &patterns {
        let (lo, hi) = hfree_bounds(h, &caps)?;
        println!(
            "{name:<12} {:>4} {:>4}  {lo}..={hi}",
            tree_depth(h, caps.tree_depth)?,
            vertex_cover_number(h, caps.vertex_cover)?
        );
    }
    Ok(())
}
