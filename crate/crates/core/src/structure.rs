//! Colourings built from vertex and edge forest partitions, from acyclic
//! colourings and from independent-set/forest partitions, together with
//! small brute-force searches that produce those partitions, and the
//! extremal family `G_n` reaching `χ = 2·χ(underlying) - 1`.
//!
//! Every construction switches a forest to all-negative; tree components
//! are rooted at their lowest vertex so the switching set is deterministic.

use std::collections::{BTreeSet, VecDeque};

use crate::colour::{switch_colouring, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchSet};

/// Largest vertex count accepted by the brute-force searches by default.
pub const DEFAULT_BRUTE_CAP: usize = 14;

/// `n²` vertices `v_{i,j}` (index `(i-1)·n + (j-1)`): an all-positive
/// `K_n` on copy 1, all-negative `K_n`s on copies `2..n`, and a positive
/// edge between every pair of non-corresponding vertices of different
/// copies.
pub fn construct_sharpness_graph(n: usize) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::NonPositiveN);
    }
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::new();
    for i in 0..n {
        let sign = if i == 0 { Sign::Positive } else { Sign::Negative };
        for j in 0..n {
            for k in j + 1..n {
                edges.push((id(i, j), id(i, k), sign));
            }
        }
    }
    for i in 0..n {
        for i2 in i + 1..n {
            for j in 0..n {
                for j2 in 0..n {
                    if j != j2 {
                        edges.push((id(i, j), id(i2, j2), Sign::Positive));
                    }
                }
            }
        }
    }
    SignedGraph::new(n * n, edges)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            x = std::mem::replace(&mut self.0[x], r);
        }
        r
    }

    /// Joins the sets; `false` if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

fn edges_acyclic(g: &SignedGraph, edges: impl IntoIterator<Item = usize>) -> bool {
    let mut dsu = Dsu::new(g.vertex_count());
    edges.into_iter().all(|i| {
        let e = g.edge(i);
        dsu.union(e.u, e.v)
    })
}

/// Edges of `g` with both endpoints accepted by `inside`.
fn induced_edges(g: &SignedGraph, inside: impl Fn(usize) -> bool) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&i| inside(g.edge(i).u) && inside(g.edge(i).v))
        .collect()
}

/// Switching set that gives every edge of the forest `edges` the sign
/// `target`.
fn forest_switch(g: &SignedGraph, edges: &[usize], target: Sign) -> SwitchSet {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &i in edges {
        let e = g.edge(i);
        adj[e.u].push((e.v, e.sign));
        adj[e.v].push((e.u, e.sign));
    }
    let mut state: Vec<Option<Sign>> = vec![None; n];
    for root in 0..n {
        if state[root].is_some() {
            continue;
        }
        state[root] = Some(Sign::Positive);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = state[u].expect("visited");
            for &(w, s) in &adj[u] {
                if state[w].is_none() {
                    state[w] = Some(su * s * target);
                    queue.push_back(w);
                }
            }
        }
    }
    (0..n).filter(|&v| state[v] == Some(Sign::Negative)).collect()
}

fn require_simple(g: &SignedGraph) -> Result<()> {
    if g.is_simple() {
        Ok(())
    } else {
        Err(Error::NotSimple)
    }
}

/// Labels each vertex with its class; errors if `classes` is not a
/// partition of `0..n`.
fn class_labels(n: usize, classes: &[&[usize]]) -> std::result::Result<Vec<usize>, String> {
    let mut label = vec![usize::MAX; n];
    for (i, class) in classes.iter().enumerate() {
        for &v in *class {
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            if label[v] != usize::MAX {
                return Err(format!("vertex {v} listed twice"));
            }
            label[v] = i;
        }
    }
    match label.iter().position(|&l| l == usize::MAX) {
        Some(v) => Err(format!("vertex {v} not covered")),
        None => Ok(label),
    }
}

/// Vertex classes each inducing a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexForestPartition {
    pub parts: Vec<Vec<usize>>,
}

impl VertexForestPartition {
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        let parts: Vec<&[usize]> = self.parts.iter().map(Vec::as_slice).collect();
        let label = class_labels(g.vertex_count(), &parts).map_err(Error::InvalidPartition)?;
        for i in 0..self.parts.len() {
            if !edges_acyclic(g, induced_edges(g, |v| label[v] == i)) {
                return Err(Error::InvalidPartition(format!("part {i} induces a cycle")));
            }
        }
        Ok(())
    }
}

/// Switches each part to an all-negative forest and gives part `i` colour
/// `i` (1-based), then pulls the colouring back. Uses `M_{2k}` for `k`
/// parts.
pub fn colour_from_vertex_forest_partition(
    g: &SignedGraph,
    p: &VertexForestPartition,
) -> Result<Colouring> {
    require_simple(g)?;
    p.validate(g)?;
    let mut values = vec![0; g.vertex_count()];
    for (i, part) in p.parts.iter().enumerate() {
        for &v in part {
            values[v] = i as i32 + 1;
        }
    }
    let forest = induced_edges(g, |_| true)
        .into_iter()
        .filter(|&i| values[g.edge(i).u] == values[g.edge(i).v])
        .collect::<Vec<_>>();
    let switch = forest_switch(g, &forest, Sign::Negative);
    Ok(switch_colouring(&values.into(), &switch))
}

/// Two edge-disjoint forests covering all edges, as edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeForestPair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl EdgeForestPair {
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        let mut seen = vec![false; g.edge_count()];
        for &i in self.first.iter().chain(&self.second) {
            if i >= g.edge_count() {
                return Err(Error::InvalidForestPair(format!("edge {i} out of range")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidForestPair(format!("edge {i} used twice")));
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidForestPair(format!("edge {i} not covered")));
        }
        for (name, f) in [("first", &self.first), ("second", &self.second)] {
            if !edges_acyclic(g, f.iter().copied()) {
                return Err(Error::InvalidForestPair(format!("{name} forest has a cycle")));
            }
        }
        Ok(())
    }
}

/// Makes the first forest all-negative and properly 2-colours the second
/// with `{1, 2}`. Uses `M_4`.
pub fn colour_from_two_edge_forests(g: &SignedGraph, f: &EdgeForestPair) -> Result<Colouring> {
    require_simple(g)?;
    f.validate(g)?;
    let switch = forest_switch(g, &f.first, Sign::Negative);
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &i in &f.second {
        let e = g.edge(i);
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut values = vec![0; n];
    for root in 0..n {
        if values[root] != 0 {
            continue;
        }
        values[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if values[w] == 0 {
                    values[w] = 3 - values[u];
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(switch_colouring(&values.into(), &switch))
}

/// A proper colouring of the underlying graph with colours `1..=colours`
/// in which any two classes induce a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicColouring {
    pub values: Vec<usize>,
    pub colours: usize,
}

impl AcyclicColouring {
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        if self.values.len() != g.vertex_count() {
            return Err(Error::NotAcyclic("wrong number of vertices".into()));
        }
        if let Some(v) = self.values.iter().position(|&c| c == 0 || c > self.colours) {
            return Err(Error::NotAcyclic(format!("vertex {v} has colour outside 1..={}", self.colours)));
        }
        if let Some(e) = g.edges().iter().find(|e| self.values[e.u] == self.values[e.v]) {
            return Err(Error::NotAcyclic(format!("edge ({}, {}) is monochromatic", e.u, e.v)));
        }
        for c in 1..=self.colours {
            for d in c + 1..=self.colours {
                let pair = induced_edges(g, |v| self.values[v] == c || self.values[v] == d);
                if !edges_acyclic(g, pair) {
                    return Err(Error::NotAcyclic(format!("classes {c} and {d} induce a cycle")));
                }
            }
        }
        Ok(())
    }
}

/// Pairs classes `{2i-1, 2i}` into forest parts coloured `i`; with an odd
/// number of colours the last class is coloured 0. Uses `M_colours`.
pub fn colour_from_acyclic(g: &SignedGraph, a: &AcyclicColouring) -> Result<Colouring> {
    require_simple(g)?;
    a.validate(g)?;
    let zero_class = (a.colours % 2 == 1).then_some(a.colours);
    let values: Vec<i32> = a
        .values
        .iter()
        .map(|&c| {
            if Some(c) == zero_class {
                0
            } else {
                c.div_ceil(2) as i32
            }
        })
        .collect();
    let forest: Vec<usize> = (0..g.edge_count())
        .filter(|&i| {
            let e = g.edge(i);
            values[e.u] != 0 && values[e.u] == values[e.v]
        })
        .collect();
    let switch = forest_switch(g, &forest, Sign::Negative);
    Ok(switch_colouring(&values.into(), &switch))
}

/// `independent` is an independent set and `forest` induces a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentForestPartition {
    pub independent: Vec<usize>,
    pub forest: Vec<usize>,
}

impl IndependentForestPartition {
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        let label = class_labels(g.vertex_count(), &[&self.independent, &self.forest])
            .map_err(Error::InvalidPartition)?;
        if let Some(e) = g.edges().iter().find(|e| label[e.u] == 0 && label[e.v] == 0) {
            return Err(Error::InvalidPartition(format!(
                "independent side contains edge ({}, {})",
                e.u, e.v
            )));
        }
        if !edges_acyclic(g, induced_edges(g, |v| label[v] == 1)) {
            return Err(Error::InvalidPartition("forest side induces a cycle".into()));
        }
        Ok(())
    }
}

/// Switches the forest side all-negative, colours it 1 and the independent
/// side 0. Uses `M_3`.
pub fn colour_from_independent_forest_partition(
    g: &SignedGraph,
    p: &IndependentForestPartition,
) -> Result<Colouring> {
    require_simple(g)?;
    p.validate(g)?;
    let mut values = vec![0; g.vertex_count()];
    for &v in &p.forest {
        values[v] = 1;
    }
    let forest = induced_edges(g, |v| values[v] == 1);
    let switch = forest_switch(g, &forest, Sign::Negative);
    Ok(switch_colouring(&values.into(), &switch))
}

/// Which partition [`brute_partition_search`] looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    TwoEdgeForests,
    VertexForests(usize),
    IndependentForest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Partition {
    EdgeForests(EdgeForestPair),
    VertexForests(VertexForestPartition),
    IndependentForest(IndependentForestPartition),
}

impl Partition {
    /// The colouring produced by the matching construction.
    pub fn colour(&self, g: &SignedGraph) -> Result<Colouring> {
        match self {
            Partition::EdgeForests(f) => colour_from_two_edge_forests(g, f),
            Partition::VertexForests(p) => colour_from_vertex_forest_partition(g, p),
            Partition::IndependentForest(p) => colour_from_independent_forest_partition(g, p),
        }
    }
}

fn guard(g: &SignedGraph, cap: usize) -> Result<()> {
    require_simple(g)?;
    if g.vertex_count() > cap {
        return Err(Error::TooLarge {
            n: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

/// Backtracking assignment of vertices to classes under incremental
/// independence and acyclicity constraints.
struct ClassSearch {
    adj: Vec<Vec<usize>>,
    classes: usize,
    /// Classes that must be independent sets.
    independent: Vec<bool>,
    /// Classes that must induce forests.
    forest: Vec<bool>,
    /// Every two classes together induce a forest.
    pairwise_forest: bool,
    /// Classes are interchangeable.
    symmetric: bool,
}

impl ClassSearch {
    fn run(&self) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut assigned = vec![None; n];
        self.descend(0, 0, &mut assigned)
            .then(|| assigned.into_iter().map(|c| c.expect("assigned")).collect())
    }

    fn descend(&self, v: usize, used: usize, assigned: &mut [Option<usize>]) -> bool {
        if v == assigned.len() {
            return true;
        }
        let limit = if self.symmetric {
            self.classes.min(used + 1)
        } else {
            self.classes
        };
        for c in 0..limit {
            if self.allowed(v, c, assigned) {
                assigned[v] = Some(c);
                if self.descend(v + 1, used.max(c + 1), assigned) {
                    return true;
                }
                assigned[v] = None;
            }
        }
        false
    }

    fn allowed(&self, v: usize, c: usize, assigned: &[Option<usize>]) -> bool {
        let same = |w: &usize| assigned[*w] == Some(c);
        if self.independent[c] && self.adj[v].iter().any(same) {
            return false;
        }
        if self.forest[c] && closes_cycle(&self.adj, assigned, v, |d| d == c) {
            return false;
        }
        if self.pairwise_forest {
            if self.adj[v].iter().any(same) {
                return false;
            }
            for d in (0..self.classes).filter(|&d| d != c) {
                if closes_cycle(&self.adj, assigned, v, |x| x == c || x == d) {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether adding `v` to the subgraph induced by assigned vertices whose
/// class passes `keep` would create a cycle.
fn closes_cycle(
    adj: &[Vec<usize>],
    assigned: &[Option<usize>],
    v: usize,
    keep: impl Fn(usize) -> bool,
) -> bool {
    let inside = |w: usize| assigned[w].is_some_and(&keep);
    let touching: Vec<usize> = adj[v].iter().copied().filter(|&w| inside(w)).collect();
    if touching.len() < 2 {
        return false;
    }
    let mut component = vec![usize::MAX; adj.len()];
    for (id, &start) in touching.iter().enumerate() {
        if component[start] != usize::MAX {
            return true;
        }
        component[start] = id;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if w != v && inside(w) && component[w] == usize::MAX {
                    component[w] = id;
                    stack.push(w);
                }
            }
        }
    }
    false
}

pub fn brute_acyclic_colouring(g: &SignedGraph, n: usize) -> Result<Option<AcyclicColouring>> {
    brute_acyclic_colouring_capped(g, n, DEFAULT_BRUTE_CAP)
}

/// Exhaustive search for an acyclic colouring of the underlying graph with
/// at most `n` colours.
pub fn brute_acyclic_colouring_capped(
    g: &SignedGraph,
    n: usize,
    cap: usize,
) -> Result<Option<AcyclicColouring>> {
    guard(g, cap)?;
    let search = ClassSearch {
        adj: g.underlying_adjacency(),
        classes: n,
        independent: vec![true; n],
        forest: vec![false; n],
        pairwise_forest: true,
        symmetric: true,
    };
    Ok(search.run().map(|labels| AcyclicColouring {
        values: labels.into_iter().map(|c| c + 1).collect(),
        colours: n,
    }))
}

pub fn brute_partition_search(g: &SignedGraph, kind: PartitionKind) -> Result<Option<Partition>> {
    brute_partition_search_capped(g, kind, DEFAULT_BRUTE_CAP)
}

pub fn brute_partition_search_capped(
    g: &SignedGraph,
    kind: PartitionKind,
    cap: usize,
) -> Result<Option<Partition>> {
    guard(g, cap)?;
    let adj = g.underlying_adjacency();
    Ok(match kind {
        PartitionKind::TwoEdgeForests => two_edge_forests(g).map(Partition::EdgeForests),
        PartitionKind::VertexForests(k) => {
            let search = ClassSearch {
                adj,
                classes: k,
                independent: vec![false; k],
                forest: vec![true; k],
                pairwise_forest: false,
                symmetric: true,
            };
            search.run().map(|labels| {
                let mut parts = vec![Vec::new(); k];
                for (v, c) in labels.into_iter().enumerate() {
                    parts[c].push(v);
                }
                parts.retain(|p| !p.is_empty());
                Partition::VertexForests(VertexForestPartition { parts })
            })
        }
        PartitionKind::IndependentForest => {
            let search = ClassSearch {
                adj,
                classes: 2,
                independent: vec![true, false],
                forest: vec![false, true],
                pairwise_forest: false,
                symmetric: false,
            };
            search.run().map(|labels| {
                let (mut independent, mut forest) = (Vec::new(), Vec::new());
                for (v, c) in labels.into_iter().enumerate() {
                    if c == 0 {
                        independent.push(v);
                    } else {
                        forest.push(v);
                    }
                }
                Partition::IndependentForest(IndependentForestPartition { independent, forest })
            })
        }
    })
}

fn two_edge_forests(g: &SignedGraph) -> Option<EdgeForestPair> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m > 2 * n.saturating_sub(1) {
        return None;
    }
    fn connected(g: &SignedGraph, forest: &[usize], a: usize, b: usize) -> bool {
        let mut seen = BTreeSet::from([a]);
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            if u == b {
                return true;
            }
            for &i in forest {
                let e = g.edge(i);
                if e.u == u || e.v == u {
                    let w = e.other(u);
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        false
    }
    fn descend(g: &SignedGraph, i: usize, forests: &mut [Vec<usize>; 2]) -> bool {
        if i == g.edge_count() {
            return true;
        }
        let e = *g.edge(i);
        for side in 0..2 {
            if i == 0 && side == 1 {
                break;
            }
            if !connected(g, &forests[side], e.u, e.v) {
                forests[side].push(i);
                if descend(g, i + 1, forests) {
                    return true;
                }
                forests[side].pop();
            }
        }
        false
    }
    let mut forests = [Vec::new(), Vec::new()];
    descend(g, 0, &mut forests).then(|| {
        let [first, second] = forests;
        EdgeForestPair { first, second }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{check_proper, ColourSet};
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn graph(n: usize, e: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::new(n, e.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> SignedGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v, if (u + v) % 3 == 0 { N } else { P }));
            }
        }
        graph(n, &e)
    }

    fn c(n: usize, negative: &[usize]) -> SignedGraph {
        SignedGraph::new(
            n,
            (0..n).map(|i| (i, (i + 1) % n, if negative.contains(&i) { N } else { P })),
        )
        .unwrap()
    }

    fn assert_proper_within(g: &SignedGraph, phi: &Colouring, n: usize) {
        assert!(check_proper(g, phi).is_ok(), "{phi:?}");
        assert!(phi.fits_in(&ColourSet::new(n).unwrap()), "{phi:?} not in M_{n}");
    }

    #[test]
    fn sharpness_small_cases() {
        let g1 = construct_sharpness_graph(1).unwrap();
        assert_eq!((g1.vertex_count(), g1.edge_count()), (1, 0));

        let g2 = construct_sharpness_graph(2).unwrap();
        assert_eq!(g2.vertex_count(), 4);
        let mut edges: Vec<_> = g2.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
        edges.sort();
        assert_eq!(edges, vec![(0, 1, P), (0, 3, P), (1, 2, P), (2, 3, N)]);

        let g3 = construct_sharpness_graph(3).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (9, 27));
        assert_eq!(construct_sharpness_graph(0), Err(Error::NonPositiveN));
    }

    #[test]
    fn vertex_forest_examples() {
        let tree = graph(4, &[(0, 1, P), (1, 2, N), (1, 3, P)]);
        let one = VertexForestPartition {
            parts: vec![vec![0, 1, 2, 3]],
        };
        let phi = colour_from_vertex_forest_partition(&tree, &one).unwrap();
        assert_proper_within(&tree, &phi, 2);

        let c4 = c(4, &[1]);
        let p = VertexForestPartition {
            parts: vec![vec![0], vec![1, 2, 3]],
        };
        let phi = colour_from_vertex_forest_partition(&c4, &p).unwrap();
        assert_proper_within(&c4, &phi, 4);
        assert!(phi.values().iter().all(|x| (1..=2).contains(&x.abs())));

        let k4 = complete(4);
        let p = VertexForestPartition {
            parts: vec![vec![0, 1], vec![2, 3]],
        };
        assert_proper_within(&k4, &colour_from_vertex_forest_partition(&k4, &p).unwrap(), 4);
    }

    #[test]
    fn vertex_forest_rejects_cycle() {
        let p = VertexForestPartition {
            parts: vec![vec![0, 1, 2]],
        };
        assert!(matches!(
            colour_from_vertex_forest_partition(&c(3, &[]), &p),
            Err(Error::InvalidPartition(_))
        ));
        let missing = VertexForestPartition {
            parts: vec![vec![0, 1]],
        };
        assert!(missing.validate(&c(3, &[])).is_err());
    }

    #[test]
    fn two_forest_examples() {
        let c4 = c(4, &[0, 3]);
        let f = EdgeForestPair {
            first: vec![0, 2],
            second: vec![1, 3],
        };
        let phi = colour_from_two_edge_forests(&c4, &f).unwrap();
        assert_proper_within(&c4, &phi, 4);

        let tree = graph(3, &[(0, 1, P), (1, 2, P)]);
        let f = EdgeForestPair {
            first: vec![0, 1],
            second: vec![],
        };
        let phi = colour_from_two_edge_forests(&tree, &f).unwrap();
        assert!(phi.values().iter().all(|x| x.abs() == 1));
        assert_proper_within(&tree, &phi, 2);

        // K4 edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
        let k4 = complete(4);
        let f = EdgeForestPair {
            first: vec![0, 3, 5],
            second: vec![1, 2, 4],
        };
        assert_proper_within(&k4, &colour_from_two_edge_forests(&k4, &f).unwrap(), 4);
    }

    #[test]
    fn two_forest_rejects_bad_pairs() {
        let c3 = c(3, &[]);
        let cyclic = EdgeForestPair {
            first: vec![0, 1, 2],
            second: vec![],
        };
        assert!(matches!(
            colour_from_two_edge_forests(&c3, &cyclic),
            Err(Error::InvalidForestPair(_))
        ));
        let overlap = EdgeForestPair {
            first: vec![0, 1],
            second: vec![1, 2],
        };
        assert!(overlap.validate(&c3).is_err());
    }

    #[test]
    fn acyclic_examples() {
        let path = graph(3, &[(0, 1, N), (1, 2, P)]);
        let a = AcyclicColouring {
            values: vec![1, 2, 1],
            colours: 2,
        };
        let phi = colour_from_acyclic(&path, &a).unwrap();
        assert!(phi.values().iter().all(|x| x.abs() == 1));
        assert_proper_within(&path, &phi, 2);

        let c4 = c(4, &[2]);
        let a = AcyclicColouring {
            values: vec![1, 2, 1, 3],
            colours: 3,
        };
        let phi = colour_from_acyclic(&c4, &a).unwrap();
        assert_eq!(phi[3], 0);
        assert_proper_within(&c4, &phi, 3);

        let k4 = complete(4);
        let a = AcyclicColouring {
            values: vec![1, 2, 3, 4],
            colours: 4,
        };
        let phi = colour_from_acyclic(&k4, &a).unwrap();
        assert_proper_within(&k4, &phi, 4);
        assert!(phi.colours_used().len() <= 4);
    }

    #[test]
    fn acyclic_validation() {
        let a = AcyclicColouring {
            values: vec![1, 2, 1, 2],
            colours: 2,
        };
        assert!(matches!(
            colour_from_acyclic(&c(4, &[]), &a),
            Err(Error::NotAcyclic(_))
        ));
    }

    #[test]
    fn brute_acyclic_examples() {
        let k4 = complete(4);
        let a = brute_acyclic_colouring(&k4, 4).unwrap().unwrap();
        a.validate(&k4).unwrap();
        assert!(brute_acyclic_colouring(&c(4, &[]), 2).unwrap().is_none());
        let a = brute_acyclic_colouring(&c(4, &[]), 3).unwrap().unwrap();
        a.validate(&c(4, &[])).unwrap();
        assert!(matches!(
            brute_acyclic_colouring(&SignedGraph::edgeless(15), 1),
            Err(Error::TooLarge { n: 15, cap: 14 })
        ));
    }

    #[test]
    fn independent_forest_examples() {
        let c5 = c(5, &[1, 3]);
        let p = IndependentForestPartition {
            independent: vec![0],
            forest: vec![1, 2, 3, 4],
        };
        let phi = colour_from_independent_forest_partition(&c5, &p).unwrap();
        assert_eq!(phi[0], 0);
        assert!(phi.values()[1..].iter().all(|x| x.abs() == 1));
        assert_proper_within(&c5, &phi, 3);

        let e = SignedGraph::edgeless(3);
        let p = IndependentForestPartition {
            independent: vec![0, 1, 2],
            forest: vec![],
        };
        assert_eq!(colour_from_independent_forest_partition(&e, &p).unwrap().values(), &[0, 0, 0]);

        let tree = graph(3, &[(0, 1, P), (0, 2, N)]);
        let p = IndependentForestPartition {
            independent: vec![],
            forest: vec![0, 1, 2],
        };
        let phi = colour_from_independent_forest_partition(&tree, &p).unwrap();
        assert!(phi.values().iter().all(|x| x.abs() == 1));
    }

    #[test]
    fn partition_search_examples() {
        let c4 = c(4, &[]);
        let found = brute_partition_search(&c4, PartitionKind::TwoEdgeForests).unwrap().unwrap();
        assert_proper_within(&c4, &found.colour(&c4).unwrap(), 4);

        assert!(brute_partition_search(&complete(5), PartitionKind::TwoEdgeForests)
            .unwrap()
            .is_none());

        let c5 = c(5, &[0]);
        let found = brute_partition_search(&c5, PartitionKind::IndependentForest)
            .unwrap()
            .unwrap();
        assert_proper_within(&c5, &found.colour(&c5).unwrap(), 3);

        let k4 = complete(4);
        let found = brute_partition_search(&k4, PartitionKind::VertexForests(2))
            .unwrap()
            .unwrap();
        assert_proper_within(&k4, &found.colour(&k4).unwrap(), 4);
        assert!(brute_partition_search(&complete(5), PartitionKind::VertexForests(2))
            .unwrap()
            .is_none());
    }
}
