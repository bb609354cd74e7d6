//! Every switching class of signed K_n for small n: balanced classes need n
//! colours, all others fit in n - 1.

use signed_colouring::brooks::colour_complete;
use signed_colouring::chromatic_number;
use signed_colouring::verify::complete_signed_graphs;

fn main() -> signed_colouring::Result<()> {
    for n in 2..=5 {
        let mut by_chi = std::collections::BTreeMap::new();
        for g in complete_signed_graphs(n) {
            let chi = chromatic_number(&g).chi;
            let phi = colour_complete(&g)?;
            assert!(phi.min_palette() <= if g.is_balanced() { n } else { n - 1 });
            *by_chi.entry((g.is_balanced(), chi)).or_insert(0) += 1;
        }
        println!("K_{n}: (balanced, chi) -> classes {by_chi:?}");
    }
    Ok(())
}
