//! Chromatic number, gamma pair and explicit palettes for a few small
//! signed graphs.

use signed_colouring::{chromatic_number, colour_set, find_n_colouring, gamma_pair, Sign, SignedGraph};

fn main() -> signed_colouring::Result<()> {
    use Sign::{Negative as N, Positive as P};
    let graphs = [
        ("all-negative triangle", SignedGraph::new(3, [(0, 1, N), (1, 2, N), (0, 2, N)])?),
        ("unbalanced 4-circuit", SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)])?),
        ("digon with a negative loop", SignedGraph::new(2, [(0, 1, P), (0, 1, N), (1, 1, N)])?),
    ];
    for n in 1..=5 {
        println!("M_{n} = {:?}", colour_set(n)?.elements());
    }
    for (name, g) in &graphs {
        let r = chromatic_number(g);
        let gp = gamma_pair(g);
        println!(
            "{name}: chi = {} via {:?}; gamma = {}, gamma* = {}",
            r.chi,
            r.witness.values(),
            gp.gamma,
            gp.gamma_star
        );
        assert!(find_n_colouring(g, r.chi - 1).is_none());
    }
    Ok(())
}
