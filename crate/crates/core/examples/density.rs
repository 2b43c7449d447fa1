//! Maximum average degree, degeneracy and depth-1/2 top-grad of a few graphs.

use defekt::density;
use defekt::gadgets;
use defekt::rational::format;
use defekt::Graph;

fn main() -> defekt::Result<()> {
    let graphs = [
        ("petersen", Graph::petersen()),
        ("K_{3,3}", Graph::complete_bipartite(3, 3)),
        ("subdivided K_5", gadgets::exact_one_subdivision(&Graph::complete(5))),
        ("wheel W_6", Graph::wheel(6)),
    ];
    for (name, g) in &graphs {
        let report = density::analyze(g, 20)?;
        println!(
            "{name:>16}: mad = {:>5}  degeneracy = {}  top-grad(1/2) = {:>5}  [{:?}]",
            format(&report.mad),
            report.degeneracy,
            format(&report.top_grad_half),
            report.method
        );
    }

    // The densest subgraph is returned with the value.
    let g = Graph::complete(4).disjoint_union(&Graph::path(6));
    let (mad, witness) = density::mad_exact(&g)?;
    println!("\nK_4 + P_6: mad = {} attained on {:?}", format(&mad), witness);
    Ok(())
}
