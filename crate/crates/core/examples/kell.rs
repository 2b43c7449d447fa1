//! Two-colouring graphs with no minor of a dominant vertex over stars.

use defekt::caps::Caps;
use defekt::colouring::{colour_kell, KellOutcome};
use defekt::{corpus, gadgets, Graph};

fn show(name: &str, g: &Graph, caps: &Caps) -> defekt::Result<()> {
    match colour_kell(g, 2, 1, caps)? {
        KellOutcome::Colouring(c) => println!(
            "{name:>10}: defect <= {} (contracted {}, worst case {}), |X| = {}",
            c.defect_bound,
            c.contracted_defect,
            c.contracted_defect_formula,
            c.x_vertices.len()
        ),
        KellOutcome::Minor { model } => println!("{name:>10}: minor {:?}", model.branch_sets),
    }
    Ok(())
}

fn main() -> defekt::Result<()> {
    let caps = Caps::default();
    show("C_9", &Graph::cycle(9), &caps)?;
    show("H(2,1)", &gadgets::gen_kell_h(2, 1)?, &caps)?;
    let mut rng = corpus::rng(6);
    for i in 0..3 {
        let g = corpus::kell_minor_free(12, 3, 2, 1, &mut rng, &caps)?;
        show(&format!("sparse {i}"), &g, &caps)?;
    }
    Ok(())
}
