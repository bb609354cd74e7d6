//! Colouring signed graphs with sign-symmetric palettes.
//!
//! A colouring `φ` of a signed graph is proper when `φ(u) ≠ σ(e)·φ(v)` for
//! every edge `e = uv`. The chromatic number is the least `n` for which a
//! proper colouring into `M_n` exists, where `M_{2k} = {±1, …, ±k}` and
//! `M_{2k+1} = M_{2k} ∪ {0}`.
//!
//! - [`graph`]: signed multigraphs, switching, balance and antibalance.
//! - [`colour`]: palettes, properness, greedy colouring, the exact solver.
//! - [`brooks`]: constructive `Δ`-colourings and signed complete graphs.
//! - [`structure`]: colourings from forest partitions and acyclic
//!   colourings, plus the extremal family `G_n`.
//! - [`verify`]: exhaustive enumeration modulo switching and theorem checks.
//! - [`io`]: the plain-text graph, colouring and partition formats.

pub mod blocks;
pub mod brooks;
pub mod colour;
pub mod error;
pub mod graph;
pub mod io;
pub mod structure;
pub mod verify;

pub use colour::{
    check_proper, chromatic_number, colour_set, degeneracy_ordering, find_n_colouring,
    gamma_pair, greedy_colour, greedy_colour_in, switch_colouring, ChromaticResult, ColourSet,
    Colouring, GammaPair,
};
pub use error::{Error, Result};
pub use graph::{BalanceReport, Circuit, Edge, Sign, SignedGraph, SwitchSet};
