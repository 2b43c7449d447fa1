//! Closed-form defect bounds, evaluated exactly.

use defekt::bounds;
use defekt::rational::{format, int, rat};
use serde_json::json;

fn main() -> defekt::Result<()> {
    println!("no 4-cycle, nabla0 = 3, nabla = 3: defect {}", bounds::no_c4_defect(&int(3), &int(3)));
    println!("N_1(3, 2, 6, 10) = {}", format(&bounds::n1(3, 2, &int(6), &int(10))));
    println!("main bound s=2 t=3 mad=9/2 topgrad=3: {}", bounds::main_defect_bound(2, 3, &rat(9, 2), &int(3)));

    println!("\nthickness 2 (earth-moon):");
    for (colours, defect) in bounds::thickness_table(2, 0) {
        println!("  ({colours}, {defect})-choosable");
    }

    for name in ["stack", "queue"] {
        let r = bounds::evaluate(name, &json!({ "k": 2 }))?;
        println!("{name} number 2: {}", r.value);
    }
    let r = bounds::evaluate("kell", &json!({ "ell": 2, "k": 1 }))?;
    println!("dominant vertex over two edges: {}", r.value);
    println!("\navailable: {}", bounds::FORMULAS.join(", "));
    Ok(())
}
