//! Constructive Brooks colouring with a printed trace of the decisions.
//!
//! Pass a graph file to colour it, otherwise a built-in example is used.

use signed_colouring::brooks::{brooks_colour, brooks_colour_traced};
use signed_colouring::io::parse_graph_file;
use signed_colouring::{Sign, SignedGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = match std::env::args().nth(1) {
        Some(path) => vec![parse_graph_file(&std::fs::read_to_string(path)?)?],
        None => {
            use Sign::{Negative as N, Positive as P};
            vec![
                // Two triangles joined at vertex 2, plus a 4-circuit through 3 and 4.
                SignedGraph::new(
                    7,
                    [
                        (0, 1, N), (1, 2, P), (0, 2, P),
                        (2, 3, P), (3, 4, N), (2, 4, P),
                        (4, 5, P), (5, 6, P), (6, 3, N),
                    ],
                )?,
                // Petersen graph: 2-connected, cubic, not complete.
                SignedGraph::new(
                    10,
                    [
                        (0, 1, P), (1, 2, N), (2, 3, P), (3, 4, P), (4, 0, N),
                        (0, 5, P), (1, 6, P), (2, 7, N), (3, 8, P), (4, 9, P),
                        (5, 7, P), (7, 9, N), (9, 6, P), (6, 8, P), (8, 5, N),
                    ],
                )?,
            ]
        }
    };
    for g in graphs {
        let cert = brooks_colour_traced(&g, &mut |event| {
            println!("  {:?} switch={:?} partial={:?}", event.step, event.switch_set.iter().collect::<Vec<_>>(), event.partial);
        })?;
        println!(
            "max degree {}, class {}, bound {}, colouring {:?}",
            g.max_degree(),
            cert.exceptional,
            cert.bound_used,
            cert.colouring.values()
        );
        assert_eq!(cert, brooks_colour(&g)?);
    }
    Ok(())
}
