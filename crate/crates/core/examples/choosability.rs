//! Exhaustive `(k, d)`-colourability and bounded-palette choosability.

use defekt::caps::Caps;
use defekt::colouring::{choosability_check_bounded_palette, is_kd_colourable_bruteforce};
use defekt::Graph;

fn main() -> defekt::Result<()> {
    let caps = Caps::default();
    for d in 0..=2 {
        let c = is_kd_colourable_bruteforce(&Graph::petersen(), 2, d, &caps)?;
        println!("Petersen (2, {d})-colourable: {:?}", c);
    }
    for (name, g) in [("C_4", Graph::cycle(4)), ("K_3,3", Graph::complete_bipartite(3, 3))] {
        for d in 0..=1 {
            let r = choosability_check_bounded_palette(&g, 2, d, 4, &caps)?;
            print!("{name} (2, {d})-choosable over 4 colours: {} ({} assignments)", r.choosable, r.assignments_checked);
            match r.counterexample {
                Some(l) => println!(", bad lists {:?}", l.lists),
                None => println!(),
            }
        }
    }
    Ok(())
}
