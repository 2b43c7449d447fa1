//! `G(s, N)` has no `K_{s,s}` minor yet no `(s - 1, N)`-colouring.

use defekt::caps::Caps;
use defekt::colouring::is_kd_colourable_bruteforce;
use defekt::gadgets;
use defekt::structure::{minor_test_bruteforce, tree_depth};
use defekt::Graph;

fn main() -> defekt::Result<()> {
    let caps = Caps::default();
    println!(" s  N  |V|  td  K_ss-minor  (s-1,N)-colourable  (s-1,N+1)-colourable");
    for s in 2..=3 {
        for n in 1..=2 {
            let g = gadgets::gen_gsn(s, n, 1000)?;
            let minor = minor_test_bruteforce(&g, &Graph::complete_bipartite(s, s), &caps)?;
            let tight = is_kd_colourable_bruteforce(&g, s - 1, n, &caps)?;
            let loose = is_kd_colourable_bruteforce(&g, s - 1, n + 1, &caps)?;
            println!(
                "{s:>2} {n:>2} {:>4} {:>3}  {:>10}  {:>18}  {:>20}",
                g.vertex_count(),
                tree_depth(&g, 64)?,
                minor.is_some(),
                tight.is_some(),
                loose.is_some()
            );
        }
    }
    Ok(())
}
