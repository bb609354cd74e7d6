//! The extremal family G_n: underlying chromatic number n, signed
//! chromatic number 2n - 1.

use signed_colouring::colour::underlying_chromatic_number;
use signed_colouring::io::render_graph;
use signed_colouring::structure::construct_sharpness_graph;
use signed_colouring::chromatic_number;

fn main() -> signed_colouring::Result<()> {
    for n in 1..=3 {
        let g = construct_sharpness_graph(n)?;
        let r = chromatic_number(&g);
        println!(
            "G_{n}: {} vertices, {} edges, underlying chi {}, chi {} (2n-1 = {})",
            g.vertex_count(),
            g.edge_count(),
            underlying_chromatic_number(&g),
            r.chi,
            2 * n - 1
        );
    }
    print!("G_2 as a graph file:\n{}", render_graph(&construct_sharpness_graph(2)?));
    Ok(())
}
