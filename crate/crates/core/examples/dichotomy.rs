//! Low-degree vertex, light edge or `K*_{s,t}`, with density parameters
//! measured on the graph itself.

use defekt::rational::{format, int};
use defekt::structure::{self, DichotomyCertificate};
use defekt::{corpus, density, gadgets, Graph};

fn describe(g: &Graph, s: usize, t: usize) -> defekt::Result<()> {
    let (mad, _) = density::mad_exact(g)?;
    let delta1 = int(2) * density::top_grad_half(g, 20)?.value;
    let d = structure::structural_dichotomy(g, s, t, &mad, &delta1)?;
    structure::validate_dichotomy(g, &d)?;
    let what = match &d.certificate {
        DichotomyCertificate::LowDegreeVertex { vertex, degree } => format!("vertex {vertex} of degree {degree}"),
        DichotomyCertificate::LightEdge { u, v, .. } => format!("{}-light edge {u}{v}", d.light_bound),
        DichotomyCertificate::KstStarSubgraph { embedding } => format!("K*_{{{s},{t}}} on A = {:?}", embedding.a),
    };
    println!("mad {:>5}  delta1 {:>5}  ell {:>4}  -> {what}", format(&mad), format(&delta1), d.light_bound);
    Ok(())
}

fn main() -> defekt::Result<()> {
    describe(&Graph::star(9), 1, 5)?;
    describe(&Graph::cycle(4), 2, 1)?;
    describe(&gadgets::gen_kst_star(3, 2), 3, 2)?;
    describe(&Graph::petersen(), 2, 2)?;
    let mut rng = corpus::rng(1);
    for _ in 0..4 {
        describe(&corpus::erdos_renyi(12, 0.5, &mut rng), 3, 2)?;
    }
    Ok(())
}
