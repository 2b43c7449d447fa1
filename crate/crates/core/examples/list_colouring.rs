//! Peel-and-replay list colouring: `k + 1` colours per list, defect `ell - k`.

use defekt::colouring::{self, ListAssignment, PeelStep};
use defekt::corpus;
use defekt::Graph;

fn main() -> defekt::Result<()> {
    // An odd cycle with lists {0, 1} needs defect 1.
    let c5 = Graph::cycle(5);
    let (colours, trace) = colouring::defective_list_colour_traced(&c5, &ListAssignment::uniform(5, 2), 1, 2)?;
    println!("C_5 colours {colours:?}");
    for step in &trace.steps {
        match step {
            PeelStep::RemoveVertex { vertex, neighbours } => println!("  remove vertex {vertex} (neighbours {neighbours:?})"),
            PeelStep::RemoveEdge { u, v } => println!("  remove light edge {u}{v}"),
        }
    }

    // Lists need not agree between vertices.
    let g = corpus::planar_with_girth(30, 5, &mut corpus::rng(4));
    let lists = ListAssignment {
        lists: g.vertices().map(|v| vec![v % 5, v % 5 + 1, v % 5 + 2]).collect(),
    };
    let k = 2;
    let ell = (k..).find(|&l| colouring::peel(&g, k, l).is_ok()).expect("terminates");
    let colours = colouring::defective_list_colour(&g, &lists, k, ell)?;
    let report = colouring::verify_defective(&g, &colours, ell - k)?;
    println!(
        "\nplanar girth-5 graph on {} vertices: ell = {ell}, measured defect {} (allowed {})",
        g.vertex_count(),
        report.max_defect,
        ell - k
    );

    // Without a reducible vertex or light edge the peel reports the residue.
    match colouring::defective_list_colour(&Graph::complete(6), &ListAssignment::uniform(6, 2), 1, 3) {
        Err(defekt::Error::Stuck { witness, .. }) => {
            println!("\nK_6 with ell = 3 is stuck on {} vertices", witness.vertex_count())
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
