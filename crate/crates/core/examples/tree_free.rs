//! Graphs without a fixed tree: `radius(T)` colours with defect `|T| - 2`,
//! or a copy of `T`.

use defekt::colouring::{colour_tree_free, TreeFreeOutcome};
use defekt::{corpus, gadgets, Graph};

fn main() -> defekt::Result<()> {
    let t = gadgets::complete_binary_tree(2);
    let hosts = [
        ("G(2,4)", gadgets::gen_gsn(2, 4, 100)?),
        ("G(3,2)", gadgets::gen_gsn(3, 2, 100)?),
        ("binary tree r=3", gadgets::complete_binary_tree(3)),
        ("grid-ish", corpus::bounded_degree(30, 4, 200, &mut corpus::rng(2))),
        ("K_6", Graph::complete(6)),
    ];
    for (name, g) in &hosts {
        match colour_tree_free(g, &t)? {
            TreeFreeOutcome::Colouring { colours, colour_count, defect } => {
                println!("{name:>16}: {colour_count} colours, defect <= {defect}: {colours:?}")
            }
            TreeFreeOutcome::Embedding { embedding } => println!("{name:>16}: contains T at {embedding:?}"),
        }
    }
    Ok(())
}
