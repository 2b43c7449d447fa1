//! Reading and writing graphs as edge lists, DIMACS and JSON.

use defekt::io::{self, Format};
use defekt::Graph;

fn main() -> defekt::Result<()> {
    let g = Graph::wheel(4);
    for format in [Format::EdgeList, Format::Dimacs, Format::Json] {
        let text = io::write(&g, format);
        let back = io::parse_auto(&text)?;
        assert_eq!(back, g);
        println!("--- {format:?}\n{}", text.trim_end());
    }
    match io::parse_edge_list("3\n0 1\n1 1\n") {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
