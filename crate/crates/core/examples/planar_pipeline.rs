//! Colouring the checked-in planar samples: acyclic 5-colouring turned into
//! a signed colouring in M_5, greedy on triangle-free graphs in M_4, and the
//! independent set plus forest construction on girth-5 graphs in M_3.

use std::path::Path;

use signed_colouring::io::parse_graph_file;
use signed_colouring::structure::{brute_acyclic_colouring, brute_partition_search, colour_from_acyclic, PartitionKind};
use signed_colouring::{check_proper, degeneracy_ordering, greedy_colour_in, ColourSet, SignedGraph};

fn load(dir: &str) -> Vec<(String, SignedGraph)> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(dir);
    let mut out: Vec<_> = std::fs::read_dir(root)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .map(|p| {
            let g = parse_graph_file(&std::fs::read_to_string(&p).unwrap()).unwrap();
            (p.file_stem().unwrap().to_string_lossy().into_owned(), g)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn main() -> signed_colouring::Result<()> {
    for (name, g) in load("planar") {
        let a = brute_acyclic_colouring(&g, 5)?.expect("planar graphs are acyclically 5-colourable");
        let phi = colour_from_acyclic(&g, &a)?;
        assert!(check_proper(&g, &phi).is_ok());
        println!("{name:>12}: acyclic {:?} -> {:?}", a.values, phi.values());
    }
    for (name, g) in load("triangle_free") {
        let d = degeneracy_ordering(&g);
        let phi = greedy_colour_in(&g, &d.order, &ColourSet::new(4)?)?.expect("3-degenerate");
        println!("{name:>12}: degeneracy {} -> {:?}", d.k, phi.values());
    }
    for (name, g) in load("girth5") {
        let p = brute_partition_search(&g, PartitionKind::IndependentForest)?.expect("partition exists");
        let phi = p.colour(&g)?;
        println!("{name:>12}: {:?}", phi.values());
    }
    Ok(())
}
