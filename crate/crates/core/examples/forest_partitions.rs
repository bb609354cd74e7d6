//! Colourings from forest structure: two edge-disjoint forests, vertex
//! classes inducing forests, and an independent set beside a forest.

use signed_colouring::structure::{
    colour_from_independent_forest_partition, colour_from_two_edge_forests,
    colour_from_vertex_forest_partition, EdgeForestPair, IndependentForestPartition,
    VertexForestPartition,
};
use signed_colouring::{check_proper, Sign, SignedGraph};

fn main() -> signed_colouring::Result<()> {
    use Sign::{Negative as N, Positive as P};
    let c4 = SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)])?;

    let forests = EdgeForestPair { first: vec![0, 2], second: vec![1, 3] };
    let phi = colour_from_two_edge_forests(&c4, &forests)?;
    println!("two edge forests: {:?}", phi.values());

    let parts = VertexForestPartition { parts: vec![vec![0], vec![1, 2, 3]] };
    let psi = colour_from_vertex_forest_partition(&c4, &parts)?;
    println!("vertex forests:   {:?}", psi.values());

    let split = IndependentForestPartition { independent: vec![0, 2], forest: vec![1, 3] };
    let chi = colour_from_independent_forest_partition(&c4, &split)?;
    println!("independent + forest: {:?}", chi.values());

    for c in [&phi, &psi, &chi] {
        assert!(check_proper(&c4, c).is_ok());
    }
    let bad = VertexForestPartition { parts: vec![vec![0, 1, 2, 3]] };
    println!("one class on a circuit: {}", colour_from_vertex_forest_partition(&c4, &bad).unwrap_err());
    Ok(())
}
