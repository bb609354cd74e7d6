//! Signed multigraphs, switching, balance and antibalance.
//!
//! A [`SignedGraph`] is immutable once built. Parallel edges and negative
//! loops are allowed; positive loops are rejected because no colouring can
//! satisfy them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Sign of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(value: i32) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    /// Multiplies a colour by this sign.
    pub fn apply(self, colour: i32) -> i32 {
        self.value() * colour
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An edge `uv` with its sign. Loops have `u == v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A set of vertices at which a graph (and a colouring) is switched.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SwitchSet {
    members: BTreeSet<usize>,
}

impl SwitchSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    /// Toggles membership of `v`.
    pub fn toggle(&mut self, v: usize) {
        if !self.members.remove(&v) {
            self.members.insert(v);
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        self.members
            .symmetric_difference(&other.members)
            .copied()
            .collect()
    }

    /// Checks that every member is a vertex of a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.members.iter().next_back() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for SwitchSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SwitchSet {
            members: iter.into_iter().collect(),
        }
    }
}

/// A closed walk given as alternating vertices and edges:
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Outcome of a balance test, with a witness that can be replayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceReport {
    /// Switching at `switch` makes every edge positive.
    Balanced { switch: SwitchSet },
    /// `circuit` has negative sign product.
    Unbalanced { circuit: Circuit },
}

impl BalanceReport {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceReport::Balanced { .. })
    }

    /// Replays the witness against `g`.
    pub fn verify(&self, g: &SignedGraph) -> bool {
        match self {
            BalanceReport::Balanced { switch } => match g.switch(switch) {
                Ok(h) => h.edges().iter().all(|e| e.sign.is_positive()),
                Err(_) => false,
            },
            BalanceReport::Unbalanced { circuit } => {
                g.circuit_sign(circuit) == Some(Sign::Negative)
            }
        }
    }
}

/// Breadth-first spanning forest: roots are taken in index order and each
/// vertex scans its incident edges in storage order.
#[derive(Debug, Clone)]
pub(crate) struct SpanningForest {
    pub parent_edge: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    pub is_tree_edge: Vec<bool>,
    pub component: Vec<usize>,
    pub components: usize,
}

/// A signed multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples, keeping multi-edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        Self::from_edges(
            n,
            edges
                .into_iter()
                .map(|(u, v, s)| Edge::new(u, v, s))
                .collect(),
        )
    }

    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        let mut degree = vec![0; n];
        for (i, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if e.is_loop() {
                if e.sign.is_positive() {
                    return Err(Error::PositiveLoop(e.u));
                }
                incidence[e.u].push(i);
                degree[e.u] += 2;
            } else {
                incidence[e.u].push(i);
                incidence[e.v].push(i);
                degree[e.u] += 1;
                degree[e.v] += 1;
            }
        }
        Ok(SignedGraph {
            n,
            edges,
            incidence,
            degree,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
            degree: vec![0; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// Indices of the edges incident with `v`, in storage order. A loop is
    /// listed once.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// `(neighbour, sign)` for every edge at `v`; a loop yields `(v, sign)`.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.incidence[v].iter().map(move |&i| {
            let e = &self.edges[i];
            (e.other(v), e.sign)
        })
    }

    /// Number of incident edges, loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn has_negative_loop(&self, v: usize) -> bool {
        self.incidence[v].iter().any(|&i| self.edges[i].is_loop())
    }

    pub fn is_loopless(&self) -> bool {
        self.edges.iter().all(|e| !e.is_loop())
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert(e.key()))
    }

    /// Sorted neighbour lists of the underlying simple graph (loops dropped,
    /// parallel edges merged).
    pub fn underlying_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![BTreeSet::new(); self.n];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// The underlying simple graph with every edge positive.
    pub fn underlying_simple(&self) -> SignedGraph {
        let mut pairs = BTreeSet::new();
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            pairs.insert(e.key());
        }
        SignedGraph::new(self.n, pairs.into_iter().map(|(u, v)| (u, v, Sign::Positive)))
            .expect("underlying graph is valid")
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.incidence[u].iter().any(|&i| self.edges[i].other(u) == v)
    }

    /// Every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let adj = self.underlying_adjacency();
        adj.iter().all(|a| a.len() + 1 == self.n)
    }

    pub fn is_connected(&self) -> bool {
        self.spanning_forest().components <= 1
    }

    /// `component[v]` labels for the connected components, numbered in
    /// order of their lowest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let f = self.spanning_forest();
        (f.components, f.component)
    }

    pub(crate) fn spanning_forest(&self) -> SpanningForest {
        let mut parent_edge = vec![None; self.n];
        let mut depth = vec![0; self.n];
        let mut is_tree_edge = vec![false; self.edges.len()];
        let mut component = vec![usize::MAX; self.n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if component[root] != usize::MAX {
                continue;
            }
            component[root] = components;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &i in &self.incidence[u] {
                    let w = self.edges[i].other(u);
                    if component[w] == usize::MAX {
                        component[w] = components;
                        parent_edge[w] = Some(i);
                        depth[w] = depth[u] + 1;
                        is_tree_edge[i] = true;
                        queue.push_back(w);
                    }
                }
            }
            components += 1;
        }
        SpanningForest {
            parent_edge,
            depth,
            is_tree_edge,
            component,
            components,
        }
    }

    /// Reverses the sign of every non-loop edge with exactly one endpoint
    /// in `s`.
    pub fn switch(&self, s: &SwitchSet) -> Result<SignedGraph> {
        s.validate(self.n)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if s.contains(e.u) != s.contains(e.v) {
                    Edge::new(e.u, e.v, -e.sign)
                } else {
                    *e
                }
            })
            .collect();
        Ok(self.with_edges(edges))
    }

    /// Reverses every non-loop edge sign. Negative loops stay negative
    /// because positive loops are not representable.
    pub fn negated(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if e.is_loop() {
                    *e
                } else {
                    Edge::new(e.u, e.v, -e.sign)
                }
            })
            .collect();
        self.with_edges(edges)
    }

    fn with_edges(&self, edges: Vec<Edge>) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges,
            incidence: self.incidence.clone(),
            degree: self.degree.clone(),
        }
    }

    /// Subgraph induced by `vertices` (in the given order). Returns the
    /// subgraph and the map from its vertices back to ours.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (SignedGraph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u] != usize::MAX && local[e.v] != usize::MAX)
            .map(|e| Edge::new(local[e.u], local[e.v], e.sign))
            .collect();
        let g = SignedGraph::from_edges(vertices.len(), edges).expect("induced subgraph is valid");
        (g, vertices.to_vec())
    }

    /// Product of the signs along `circuit`, or `None` if it is not a closed
    /// walk of this graph.
    pub fn circuit_sign(&self, circuit: &Circuit) -> Option<Sign> {
        let len = circuit.vertices.len();
        if len == 0 || circuit.edges.len() != len {
            return None;
        }
        let mut product = Sign::Positive;
        for (i, &ei) in circuit.edges.iter().enumerate() {
            let e = self.edges.get(ei)?;
            let a = circuit.vertices[i];
            let b = circuit.vertices[(i + 1) % len];
            if !((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
                return None;
            }
            product = product * e.sign;
        }
        Some(product)
    }

    /// Balance test by sign propagation along a breadth-first spanning
    /// forest. For an unbalanced graph the witness is the fundamental circuit
    /// of the first inconsistent non-tree edge in storage order.
    pub fn balance(&self) -> BalanceReport {
        let forest = self.spanning_forest();
        let mut state = vec![Sign::Positive; self.n];
        // BFS order guarantees parents are assigned before children.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (forest.component[v], forest.depth[v]));
        for &v in &order {
            if let Some(pe) = forest.parent_edge[v] {
                let e = &self.edges[pe];
                state[v] = state[e.other(v)] * e.sign;
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if forest.is_tree_edge[i] {
                continue;
            }
            if state[e.u] * e.sign * state[e.v] == Sign::Negative {
                return BalanceReport::Unbalanced {
                    circuit: self.fundamental_circuit(&forest, i),
                };
            }
        }
        BalanceReport::Balanced {
            switch: (0..self.n).filter(|&v| state[v] == Sign::Negative).collect(),
        }
    }

    fn fundamental_circuit(&self, forest: &SpanningForest, closing: usize) -> Circuit {
        let e = &self.edges[closing];
        if e.is_loop() {
            return Circuit {
                vertices: vec![e.u],
                edges: vec![closing],
            };
        }
        let (mut a, mut b) = (e.u, e.v);
        let (mut up_vertices, mut up_edges) = (vec![a], Vec::new());
        let (mut down_vertices, mut down_edges) = (vec![b], Vec::new());
        let step = |x: usize| {
            let pe = forest.parent_edge[x].expect("non-root has a parent");
            (self.edges[pe].other(x), pe)
        };
        while forest.depth[a] > forest.depth[b] {
            let (p, pe) = step(a);
            up_edges.push(pe);
            up_vertices.push(p);
            a = p;
        }
        while forest.depth[b] > forest.depth[a] {
            let (p, pe) = step(b);
            down_edges.push(pe);
            down_vertices.push(p);
            b = p;
        }
        while a != b {
            let (pa, ea) = step(a);
            up_edges.push(ea);
            up_vertices.push(pa);
            a = pa;
            let (pb, eb) = step(b);
            down_edges.push(eb);
            down_vertices.push(pb);
            b = pb;
        }
        // Both paths end at the common ancestor; keep it once.
        down_vertices.pop();
        let mut vertices = up_vertices;
        vertices.extend(down_vertices.into_iter().rev());
        let mut edges = up_edges;
        edges.extend(down_edges.into_iter().rev());
        edges.push(closing);
        Circuit { vertices, edges }
    }

    pub fn is_balanced(&self) -> bool {
        self.balance().is_balanced()
    }

    /// Switching equivalent to the all-negative signature.
    pub fn is_antibalanced(&self) -> bool {
        self.negated().is_balanced()
    }

    /// Two-sided vertex partition with every edge inside a side negative and
    /// every edge across positive; `None` if the graph is not antibalanced.
    /// `true` marks the switched side.
    pub fn antibalance_partition(&self) -> Option<Vec<bool>> {
        match self.negated().balance() {
            BalanceReport::Balanced { switch } => {
                Some((0..self.n).map(|v| switch.contains(v)).collect())
            }
            BalanceReport::Unbalanced { .. } => None,
        }
    }

    /// Whether some switching of `self` yields `other`. Both graphs must
    /// carry the same labelled underlying edge multiset.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::UnderlyingMismatch);
        }
        let (mine, theirs) = (self.sign_multisets(), other.sign_multisets());
        let same_pairs = mine.len() == theirs.len()
            && mine
                .iter()
                .zip(&theirs)
                .all(|((ka, a), (kb, b))| ka == kb && a.len() == b.len());
        if !same_pairs {
            return Err(Error::UnderlyingMismatch);
        }
        // Each vertex pair fixes whether it must be cut by the switching set;
        // the constraints are satisfiable iff the constraint graph is balanced.
        let mut constraints = Vec::new();
        for ((&(u, v), a), b) in mine.iter().zip(theirs.values()) {
            let flipped: Vec<Sign> = {
                let mut f: Vec<Sign> = a.iter().map(|&s| -s).collect();
                f.sort();
                f
            };
            let same = a == b;
            if u == v {
                if !same {
                    return Ok(false);
                }
                continue;
            }
            match (same, &flipped == b) {
                (false, false) => return Ok(false),
                (true, false) => constraints.push((u, v, Sign::Positive)),
                (false, true) => constraints.push((u, v, Sign::Negative)),
                (true, true) => {}
            }
        }
        Ok(SignedGraph::new(self.n, constraints)?.is_balanced())
    }

    fn sign_multisets(&self) -> BTreeMap<(usize, usize), Vec<Sign>> {
        let mut map: BTreeMap<(usize, usize), Vec<Sign>> = BTreeMap::new();
        for e in &self.edges {
            map.entry(e.key()).or_default().push(e.sign);
        }
        for signs in map.values_mut() {
            signs.sort();
        }
        map
    }
}
