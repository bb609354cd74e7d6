//! Constructive `Δ`-colourings of simple connected signed graphs and the
//! colouring of signed complete graphs.
//!
//! [`brooks_colour`] returns a colouring into `M_Δ` unless the graph is a
//! balanced complete graph, a balanced odd circuit or an unbalanced even
//! circuit, in which case it returns an optimal colouring into `M_{Δ+1}`.
//!
//! The 2-connected case colours a non-adjacent pair `a, b` with a common
//! neighbour `x` identically and then colours greedily towards `x`. Graphs
//! with a cut vertex are split into pieces at the lowest cut vertex, each
//! piece is coloured recursively and the pieces are glued with
//! sign-symmetric colour permutations. When a piece insists on colour 0 at
//! the cut vertex it is recoloured from a zero-coloured neighbour, with an
//! exact search as the last resort.

use std::collections::VecDeque;
use std::fmt;

use crate::blocks::{block_cut, connected_without, is_two_connected};
use crate::colour::{
    check_proper, collect, greedy_extend, switch_colouring, ColourSet, Colouring,
    ColouringSearch,
};
use crate::error::{Error, Result};
use crate::graph::{BalanceReport, Sign, SignedGraph, SwitchSet};

/// The connected simple signed graphs with `χ = Δ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalClass {
    BalancedComplete,
    BalancedOddCircuit,
    UnbalancedEvenCircuit,
    None,
}

impl ExceptionalClass {
    pub fn is_exceptional(self) -> bool {
        self != ExceptionalClass::None
    }
}

impl fmt::Display for ExceptionalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExceptionalClass::BalancedComplete => "balanced-complete",
            ExceptionalClass::BalancedOddCircuit => "balanced-odd-circuit",
            ExceptionalClass::UnbalancedEvenCircuit => "unbalanced-even-circuit",
            ExceptionalClass::None => "none",
        };
        f.write_str(s)
    }
}

/// A verified colouring into `M_{bound_used}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksCertificate {
    pub colouring: Colouring,
    /// `Δ`, or `Δ + 1` for the exceptional classes.
    pub bound_used: usize,
    pub exceptional: ExceptionalClass,
}

/// Algorithm milestones reported to a trace hook. Vertex ids refer to the
/// input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    Exceptional(ExceptionalClass),
    /// Paths and non-exceptional circuits, coloured via antibalance.
    MaxDegreeTwo,
    /// Unbalanced complete piece.
    Complete,
    /// Piece with maximum degree below the palette size, coloured greedily.
    SlackGreedy,
    /// Signs of `ax` and `bx` after switching.
    NoncutPair {
        a: usize,
        x: usize,
        b: usize,
        sign_ax: Sign,
        sign_bx: Sign,
    },
    CutVertex { v: usize, pieces: usize },
    LocalRecolour { v: usize },
    ZeroStart { v: usize, u: usize },
    ExactFallback { v: usize, zero: bool },
    Merged { v: usize, colour: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub step: TraceStep,
    pub switch_set: SwitchSet,
    /// `(vertex, colour)` pairs known at this step.
    pub partial: Vec<(usize, i32)>,
}

fn require_simple_connected(g: &SignedGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

fn is_circuit(g: &SignedGraph) -> bool {
    g.vertex_count() >= 3 && (0..g.vertex_count()).all(|v| g.degree(v) == 2)
}

pub fn classify_exceptional(g: &SignedGraph) -> Result<ExceptionalClass> {
    require_simple_connected(g)?;
    let balanced = g.is_balanced();
    let odd = g.vertex_count() % 2 == 1;
    Ok(if g.is_complete() && balanced {
        ExceptionalClass::BalancedComplete
    } else if is_circuit(g) && balanced && odd {
        ExceptionalClass::BalancedOddCircuit
    } else if is_circuit(g) && !balanced && !odd {
        ExceptionalClass::UnbalancedEvenCircuit
    } else {
        ExceptionalClass::None
    })
}

/// Colours a signed complete graph on `n` vertices with `M_n` when balanced
/// and with `M_{n-1}` otherwise.
pub fn colour_complete(g: &SignedGraph) -> Result<Colouring> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !g.is_complete() {
        return Err(Error::NotComplete);
    }
    match g.balance() {
        BalanceReport::Balanced { switch } => {
            let ladder = ColourSet::new(g.vertex_count())?.ladder();
            Ok(switch_colouring(&ladder.into(), &switch))
        }
        BalanceReport::Unbalanced { .. } => Ok(colour_unbalanced_complete(g)),
    }
}

fn colour_unbalanced_complete(g: &SignedGraph) -> Colouring {
    let n = g.vertex_count();
    debug_assert!(n >= 3 && !g.is_balanced());
    if n == 3 {
        let switch = match g.negated().balance() {
            BalanceReport::Balanced { switch } => switch,
            BalanceReport::Unbalanced { .. } => unreachable!("an unbalanced triangle is antibalanced"),
        };
        return switch_colouring(&vec![1; 3].into(), &switch);
    }
    if n % 2 == 1 {
        let triangle = first_unbalanced_triangle(g).expect("unbalanced complete graph");
        let mut outside = (0..n).filter(|v| !triangle.contains(v));
        let (x, y) = (outside.next().unwrap(), outside.next().unwrap());
        let mut switch = SwitchSet::new();
        if edge_sign(g, x, y).is_positive() {
            switch.insert(x);
        }
        let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
        let (sub, map) = g.induced_subgraph(&rest);
        let inner = colour_unbalanced_complete(&sub);
        let d = ((n - 1) / 2) as i32;
        let mut values = vec![d; n];
        for (i, &v) in map.iter().enumerate() {
            values[v] = inner[i];
        }
        switch_colouring(&values.into(), &switch)
    } else {
        let (v, sub, map) = (0..n)
            .find_map(|v| {
                let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
                let (sub, map) = g.induced_subgraph(&rest);
                (!sub.is_balanced()).then_some((v, sub, map))
            })
            .expect("some vertex deletion stays unbalanced");
        let inner = colour_unbalanced_complete(&sub);
        let mut values = vec![0; n];
        for (i, &w) in map.iter().enumerate() {
            values[w] = inner[i];
        }
        debug_assert_eq!(values[v], 0);
        values.into()
    }
}

fn first_unbalanced_triangle(g: &SignedGraph) -> Option<[usize; 3]> {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if edge_sign(g, u, v) * edge_sign(g, v, w) * edge_sign(g, u, w) == Sign::Negative {
                    return Some([u, v, w]);
                }
            }
        }
    }
    None
}

fn edge_sign(g: &SignedGraph, u: usize, v: usize) -> Sign {
    g.incident_edges(u)
        .iter()
        .map(|&i| g.edge(i))
        .find(|e| e.other(u) == v)
        .map(|e| e.sign)
        .expect("vertices are adjacent")
}

/// An ordering that ends at `last` in which every other vertex has a
/// neighbour later in the sequence (reversed breadth-first discovery).
pub fn connected_ordering(g: &SignedGraph, last: usize) -> Result<Vec<usize>> {
    if last >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: last,
            n: g.vertex_count(),
        });
    }
    ordering_within(g, &vec![true; g.vertex_count()], last).ok_or(Error::NotConnected)
}

fn ordering_within(g: &SignedGraph, allowed: &[bool], last: usize) -> Option<Vec<usize>> {
    let adj = g.underlying_adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut discovered = vec![last];
    let mut queue = VecDeque::from([last]);
    seen[last] = true;
    while let Some(u) = queue.pop_front() {
        // Higher indices are discovered first so that, once reversed, ties
        // come out in increasing index order.
        for &w in adj[u].iter().rev() {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                discovered.push(w);
                queue.push_back(w);
            }
        }
    }
    let wanted = allowed.iter().filter(|&&a| a).count();
    (discovered.len() == wanted).then(|| {
        discovered.reverse();
        discovered
    })
}

/// A path `a x b` with `a`, `b` non-adjacent and `G - {a, b}` connected,
/// first in lexicographic order of `(a, x, b)`.
pub fn find_noncut_pair(g: &SignedGraph) -> Result<(usize, usize, usize)> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if g.is_complete() {
        return Err(Error::PreconditionViolated("graph is complete".into()));
    }
    if g.max_degree() < 3 {
        return Err(Error::PreconditionViolated("maximum degree below 3".into()));
    }
    if !is_two_connected(g) {
        return Err(Error::PreconditionViolated("graph is not 2-connected".into()));
    }
    let adj = g.underlying_adjacency();
    for a in 0..g.vertex_count() {
        for &x in &adj[a] {
            for &b in &adj[x] {
                if b != a && adj[a].binary_search(&b).is_err() && connected_without(g, &[a, b]) {
                    return Ok((a, x, b));
                }
            }
        }
    }
    Err(Error::InternalBoundExceeded(
        "no non-separating pair at distance two".into(),
    ))
}

pub fn brooks_colour(g: &SignedGraph) -> Result<BrooksCertificate> {
    brooks_colour_traced(g, &mut |_| {})
}

/// [`brooks_colour`] with a hook receiving every [`TraceEvent`].
pub fn brooks_colour_traced(
    g: &SignedGraph,
    trace: &mut dyn FnMut(&TraceEvent),
) -> Result<BrooksCertificate> {
    let exceptional = classify_exceptional(g)?;
    let delta = g.max_degree();
    let origin: Vec<usize> = (0..g.vertex_count()).collect();
    let mut run = Run { trace };
    let (colouring, bound_used) = if exceptional.is_exceptional() {
        run.emit(TraceStep::Exceptional(exceptional), SwitchSet::new(), vec![]);
        (exceptional_colouring(g, exceptional)?, delta + 1)
    } else {
        (run.colour_within(g, &origin, delta)?, delta)
    };
    if let Err(v) = check_proper(g, &colouring) {
        return Err(Error::InternalBoundExceeded(format!("improper output: {v}")));
    }
    if !colouring.fits_in(&ColourSet::new(bound_used)?) {
        return Err(Error::InternalBoundExceeded(format!(
            "colouring leaves M_{bound_used}"
        )));
    }
    Ok(BrooksCertificate {
        colouring,
        bound_used,
        exceptional,
    })
}

/// Vertices of a circuit in walking order starting at 0, and the edge
/// leaving each of them.
fn circuit_walk(g: &SignedGraph) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut vertices = vec![0];
    let mut edges = Vec::with_capacity(n);
    let mut prev_edge = usize::MAX;
    let mut cur = 0;
    for _ in 0..n {
        let e = *g
            .incident_edges(cur)
            .iter()
            .find(|&&i| i != prev_edge)
            .expect("circuit vertex has two edges");
        edges.push(e);
        prev_edge = e;
        cur = g.edge(e).other(cur);
        if vertices.len() < n {
            vertices.push(cur);
        }
    }
    (vertices, edges)
}

/// `0` at the first vertex, then `1, -1, 1, …` along the circuit.
fn alternate_from_zero(order: &[usize], n: usize) -> Vec<i32> {
    let mut values = vec![0; n];
    for (i, &v) in order.iter().enumerate().skip(1) {
        values[v] = if i % 2 == 1 { 1 } else { -1 };
    }
    values
}

fn exceptional_colouring(g: &SignedGraph, class: ExceptionalClass) -> Result<Colouring> {
    let n = g.vertex_count();
    match class {
        ExceptionalClass::BalancedComplete => colour_complete(g),
        ExceptionalClass::BalancedOddCircuit => {
            let BalanceReport::Balanced { switch } = g.balance() else {
                unreachable!("classified as balanced")
            };
            let (order, _) = circuit_walk(g);
            Ok(switch_colouring(&alternate_from_zero(&order, n).into(), &switch))
        }
        ExceptionalClass::UnbalancedEvenCircuit => {
            // Make every edge but the closing one positive; the closing edge
            // is then negative and the 0 sits at its endpoint v0.
            let (order, edges) = circuit_walk(g);
            let mut state = vec![Sign::Positive; n];
            for i in 0..n - 1 {
                state[order[i + 1]] = state[order[i]] * g.edge(edges[i]).sign;
            }
            let switch = (0..n).filter(|&v| state[v] == Sign::Negative).collect();
            Ok(switch_colouring(&alternate_from_zero(&order, n).into(), &switch))
        }
        ExceptionalClass::None => Err(Error::PreconditionViolated("not exceptional".into())),
    }
}

/// Sign-symmetric permutation of the non-zero colours sending `c` to `1`.
fn normalise_to_one(c: i32) -> impl Fn(i32) -> i32 {
    let (a, s) = (c.abs(), c.signum());
    move |x| {
        let y = s * x;
        if y.abs() == a {
            y.signum()
        } else if y.abs() == 1 {
            y.signum() * a
        } else {
            y
        }
    }
}

struct Run<'t> {
    trace: &'t mut dyn FnMut(&TraceEvent),
}

impl Run<'_> {
    fn emit(&mut self, step: TraceStep, switch_set: SwitchSet, partial: Vec<(usize, i32)>) {
        (self.trace)(&TraceEvent {
            step,
            switch_set,
            partial,
        });
    }

    /// Colours a simple connected piece with `Δ(h) ≤ delta` into `M_delta`.
    /// The caller guarantees the piece is not exceptional at `delta`.
    fn colour_within(&mut self, h: &SignedGraph, origin: &[usize], delta: usize) -> Result<Colouring> {
        let palette = ColourSet::new(delta.max(1))?;
        let n = h.vertex_count();
        if h.max_degree() < delta || n == 1 {
            let order = crate::colour::degeneracy_ordering(h).order;
            let mut partial = vec![None; n];
            if !greedy_extend(h, &mut partial, &order, Some(&palette)) {
                return Err(Error::InternalBoundExceeded("slack greedy ran out".into()));
            }
            self.emit(TraceStep::SlackGreedy, SwitchSet::new(), vec![]);
            return Ok(collect(partial));
        }
        if delta <= 2 {
            let side = h
                .antibalance_partition()
                .ok_or_else(|| Error::InternalBoundExceeded("degree-2 piece not antibalanced".into()))?;
            let switch: SwitchSet = (0..n).filter(|&v| side[v]).collect();
            self.emit(
                TraceStep::MaxDegreeTwo,
                switch.iter().map(|v| origin[v]).collect(),
                vec![],
            );
            return Ok(switch_colouring(&vec![1; n].into(), &switch));
        }
        if h.is_complete() {
            self.emit(TraceStep::Complete, SwitchSet::new(), vec![]);
            return colour_complete(h);
        }
        if is_two_connected(h) {
            self.two_connected(h, origin, &palette)
        } else {
            self.with_cut_vertex(h, origin, delta, &palette)
        }
    }

    fn two_connected(&mut self, h: &SignedGraph, origin: &[usize], palette: &ColourSet) -> Result<Colouring> {
        let (a, x, b) = find_noncut_pair(h)?;
        let mut switch = SwitchSet::new();
        if !edge_sign(h, a, x).is_positive() {
            switch.insert(a);
        }
        if !edge_sign(h, b, x).is_positive() {
            switch.insert(b);
        }
        let switched = h.switch(&switch)?;
        self.emit(
            TraceStep::NoncutPair {
                a: origin[a],
                x: origin[x],
                b: origin[b],
                sign_ax: edge_sign(&switched, a, x),
                sign_bx: edge_sign(&switched, b, x),
            },
            switch.iter().map(|v| origin[v]).collect(),
            vec![(origin[a], 1), (origin[b], 1)],
        );
        let mut partial = vec![None; h.vertex_count()];
        partial[a] = Some(1);
        partial[b] = Some(1);
        let mut allowed = vec![true; h.vertex_count()];
        allowed[a] = false;
        allowed[b] = false;
        let order = ordering_within(&switched, &allowed, x)
            .ok_or_else(|| Error::InternalBoundExceeded("G - {a, b} disconnected".into()))?;
        if !greedy_extend(&switched, &mut partial, &order, Some(palette)) {
            return Err(Error::InternalBoundExceeded("greedy ran out in the 2-connected case".into()));
        }
        Ok(switch_colouring(&collect(partial), &switch))
    }

    fn with_cut_vertex(
        &mut self,
        h: &SignedGraph,
        origin: &[usize],
        delta: usize,
        palette: &ColourSet,
    ) -> Result<Colouring> {
        let n = h.vertex_count();
        let v = block_cut(h).cut_vertices[0];
        let pieces = pieces_at(h, v);
        self.emit(
            TraceStep::CutVertex {
                v: origin[v],
                pieces: pieces.len(),
            },
            SwitchSet::new(),
            vec![],
        );
        let mut colourings = Vec::with_capacity(pieces.len());
        for (piece, map) in &pieces {
            let sub_origin: Vec<usize> = map.iter().map(|&i| origin[i]).collect();
            colourings.push(self.colour_within(piece, &sub_origin, delta)?);
        }
        let local_v: Vec<usize> = pieces
            .iter()
            .map(|(_, map)| map.iter().position(|&w| w == v).expect("piece contains v"))
            .collect();

        let mut all_nonzero = true;
        for i in 0..pieces.len() {
            if colourings[i][local_v[i]] != 0 {
                continue;
            }
            let (piece, map) = &pieces[i];
            match self.make_nonzero(piece, &colourings[i], local_v[i], palette, origin[map[local_v[i]]]) {
                Some(c) => colourings[i] = c,
                None => {
                    all_nonzero = false;
                    break;
                }
            }
        }
        if !all_nonzero {
            // Some piece forces 0 at v, so every piece must accept 0 there.
            for i in 0..pieces.len() {
                if colourings[i][local_v[i]] == 0 {
                    continue;
                }
                let c = ColouringSearch::new(&pieces[i].0, delta)
                    .fix(local_v[i], 0)
                    .run()
                    .ok_or_else(|| Error::InternalBoundExceeded("no colouring of the pieces agrees at the cut vertex".into()))?;
                self.emit(
                    TraceStep::ExactFallback {
                        v: origin[v],
                        zero: true,
                    },
                    SwitchSet::new(),
                    vec![(origin[v], 0)],
                );
                colourings[i] = c;
            }
        }

        let mut values = vec![None; n];
        for ((_, map), (c, &lv)) in pieces.iter().zip(colourings.iter().zip(&local_v)) {
            let at_v = c[lv];
            let perm: Box<dyn Fn(i32) -> i32> = if at_v == 0 {
                Box::new(|x| x)
            } else {
                Box::new(normalise_to_one(at_v))
            };
            for (i, &w) in map.iter().enumerate() {
                values[w] = Some(perm(c[i]));
            }
        }
        let merged = collect(values);
        self.emit(
            TraceStep::Merged {
                v: origin[v],
                colour: merged[v],
            },
            SwitchSet::new(),
            vec![(origin[v], merged[v])],
        );
        Ok(merged)
    }

    /// Recolours a piece so that its cut vertex `v` gets a non-zero colour.
    fn make_nonzero(
        &mut self,
        piece: &SignedGraph,
        current: &Colouring,
        v: usize,
        palette: &ColourSet,
        original_v: usize,
    ) -> Option<Colouring> {
        let forbidden: Vec<i32> = piece
            .neighbours(v)
            .map(|(w, s)| s.apply(current[w]))
            .collect();
        if let Some(c) = palette
            .ladder()
            .into_iter()
            .find(|&c| c != 0 && !forbidden.contains(&c))
        {
            let mut values = current.values().to_vec();
            values[v] = c;
            self.emit(TraceStep::LocalRecolour { v: original_v }, SwitchSet::new(), vec![(original_v, c)]);
            return Some(values.into());
        }

        let neighbours: Vec<usize> = piece.underlying_adjacency()[v].clone();
        for u in neighbours {
            if !connected_without(piece, &[u]) {
                continue;
            }
            let mut allowed = vec![true; piece.vertex_count()];
            allowed[u] = false;
            let Some(order) = ordering_within(piece, &allowed, v) else {
                continue;
            };
            let mut partial = vec![None; piece.vertex_count()];
            partial[u] = Some(0);
            if greedy_extend(piece, &mut partial, &order, Some(palette)) && partial[v] != Some(0) {
                self.emit(TraceStep::ZeroStart { v: original_v, u }, SwitchSet::new(), vec![]);
                return Some(collect(partial));
            }
        }

        let found = ColouringSearch::new(piece, palette.size()).forbid_zero(v).run();
        if found.is_some() {
            self.emit(
                TraceStep::ExactFallback {
                    v: original_v,
                    zero: false,
                },
                SwitchSet::new(),
                vec![],
            );
        }
        found
    }
}

/// The subgraphs induced by `v` together with each component of `h - v`.
fn pieces_at(h: &SignedGraph, v: usize) -> Vec<(SignedGraph, Vec<usize>)> {
    let n = h.vertex_count();
    let mut label = vec![usize::MAX; n];
    label[v] = usize::MAX - 1;
    let mut pieces = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = pieces.len();
        let mut members = vec![start];
        label[start] = id;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for (w, _) in h.neighbours(u) {
                if label[w] == usize::MAX {
                    label[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.push(v);
        members.sort_unstable();
        pieces.push(h.induced_subgraph(&members));
    }
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::chromatic_number;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn complete(n: usize, negative: &[(usize, usize)]) -> SignedGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let s = if negative.contains(&(u, v)) { N } else { P };
                e.push((u, v, s));
            }
        }
        SignedGraph::new(n, e).unwrap()
    }

    fn cycle(n: usize, negative: &[usize]) -> SignedGraph {
        SignedGraph::new(
            n,
            (0..n).map(|i| (i, (i + 1) % n, if negative.contains(&i) { N } else { P })),
        )
        .unwrap()
    }

    fn graph(n: usize, e: &[(usize, usize)]) -> SignedGraph {
        SignedGraph::new(n, e.iter().map(|&(u, v)| (u, v, P))).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_exceptional(&complete(5, &[])).unwrap(),
            ExceptionalClass::BalancedComplete
        );
        assert_eq!(
            classify_exceptional(&cycle(5, &[])).unwrap(),
            ExceptionalClass::BalancedOddCircuit
        );
        assert_eq!(classify_exceptional(&cycle(6, &[])).unwrap(), ExceptionalClass::None);
        assert_eq!(
            classify_exceptional(&cycle(4, &[2])).unwrap(),
            ExceptionalClass::UnbalancedEvenCircuit
        );
        assert_eq!(classify_exceptional(&cycle(3, &[1])).unwrap(), ExceptionalClass::None);
    }

    #[test]
    fn classify_rejects() {
        let parallel = SignedGraph::new(2, [(0, 1, P), (0, 1, N)]).unwrap();
        assert_eq!(classify_exceptional(&parallel), Err(Error::NotSimple));
        assert_eq!(
            classify_exceptional(&SignedGraph::edgeless(2)),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn complete_unbalanced_triangle() {
        let g = complete(3, &[(0, 1)]);
        let phi = colour_complete(&g).unwrap();
        assert!(check_proper(&g, &phi).is_ok());
        assert!(phi.values().iter().all(|c| c.abs() == 1));
        assert!(phi.fits_in(&ColourSet::new(2).unwrap()));
    }

    #[test]
    fn complete_balanced_k4() {
        let g = complete(4, &[]);
        let phi = colour_complete(&g).unwrap();
        assert!(check_proper(&g, &phi).is_ok());
        let mut used: Vec<i32> = phi.values().to_vec();
        used.sort();
        assert_eq!(used, vec![-2, -1, 1, 2]);
    }

    #[test]
    fn complete_unbalanced_k4() {
        let g = complete(4, &[(0, 1)]);
        let phi = colour_complete(&g).unwrap();
        assert!(check_proper(&g, &phi).is_ok());
        assert!(phi.fits_in(&ColourSet::new(3).unwrap()));
        assert_eq!(phi.values().iter().filter(|&&c| c == 0).count(), 1);
    }

    #[test]
    fn complete_rejects_non_complete() {
        assert_eq!(colour_complete(&cycle(4, &[])), Err(Error::NotComplete));
    }

    #[test]
    fn ordering_examples() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(connected_ordering(&path, 2).unwrap(), vec![0, 1, 2]);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(connected_ordering(&star, 0).unwrap(), vec![1, 2, 3, 0]);
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(connected_ordering(&tri, 1).unwrap(), vec![0, 2, 1]);
        assert_eq!(
            connected_ordering(&SignedGraph::edgeless(2), 0),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn noncut_pair_examples() {
        // K4 minus the edge 0-1.
        let g = graph(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(find_noncut_pair(&g).unwrap(), (0, 2, 1));
        // K_{2,3}: sides {0,1} and {2,3,4}. Removing 0 and 1 would leave
        // three isolated vertices, so the pair comes from the 3-side.
        let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let (a, x, b) = find_noncut_pair(&k23).unwrap();
        assert!(a >= 2 && b >= 2 && x <= 1);
        assert!(matches!(
            find_noncut_pair(&complete(4, &[])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn brooks_examples() {
        let k4 = complete(4, &[(1, 2)]);
        let cert = brooks_colour(&k4).unwrap();
        assert_eq!(cert.bound_used, 3);
        assert_eq!(cert.exceptional, ExceptionalClass::None);

        let c6 = cycle(6, &[]);
        let cert = brooks_colour(&c6).unwrap();
        assert_eq!(cert.bound_used, 2);
        assert!(cert.colouring.colours_used().len() <= 2);

        let c5 = cycle(5, &[]);
        let cert = brooks_colour(&c5).unwrap();
        assert_eq!(cert.bound_used, 3);
        assert_eq!(cert.exceptional, ExceptionalClass::BalancedOddCircuit);

        let c4 = cycle(4, &[3]);
        let cert = brooks_colour(&c4).unwrap();
        assert_eq!(cert.bound_used, 3);
        assert_eq!(chromatic_number(&c4).chi, 3);
    }

    #[test]
    fn brooks_single_vertex_and_edge() {
        let cert = brooks_colour(&SignedGraph::edgeless(1)).unwrap();
        assert_eq!((cert.bound_used, cert.colouring.values()), (1, &[0][..]));
        let cert = brooks_colour(&graph(2, &[(0, 1)])).unwrap();
        assert_eq!(cert.bound_used, 2);
    }

    #[test]
    fn two_connected_trace_shows_positive_pair() {
        // Wheel W5 with one negative spoke; 2-connected, Δ = 4, not complete.
        let mut e: Vec<(usize, usize, Sign)> = (0..4).map(|i| (i, (i + 1) % 4, P)).collect();
        e.extend((0..4).map(|i| (i, 4, if i == 1 { N } else { P })));
        e[0].2 = N;
        let g = SignedGraph::new(5, e).unwrap();
        let mut seen = Vec::new();
        let cert = brooks_colour_traced(&g, &mut |ev| seen.push(ev.clone())).unwrap();
        assert_eq!(cert.bound_used, 4);
        let pair = seen
            .iter()
            .find_map(|ev| match ev.step {
                TraceStep::NoncutPair { sign_ax, sign_bx, .. } => Some((sign_ax, sign_bx)),
                _ => None,
            })
            .expect("2-connected case taken");
        assert_eq!(pair, (P, P));
    }

    #[test]
    fn cut_vertex_graph() {
        // Two K4s sharing vertex 3, Δ = 6.
        let mut e = Vec::new();
        for block in [[0, 1, 2, 3], [3, 4, 5, 6]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    e.push((block[i], block[j]));
                }
            }
        }
        let g = graph(7, &e);
        let cert = brooks_colour(&g).unwrap();
        assert_eq!(cert.bound_used, 6);
        assert!(check_proper(&g, &cert.colouring).is_ok());
    }

    #[test]
    fn bridge_between_balanced_k4s() {
        // Two balanced K4s joined by a bridge: Δ = 4 at both bridge ends.
        let mut e = Vec::new();
        for block in [[0, 1, 2, 3], [4, 5, 6, 7]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    e.push((block[i], block[j]));
                }
            }
        }
        e.push((3, 4));
        let g = graph(8, &e);
        let cert = brooks_colour(&g).unwrap();
        assert_eq!(cert.bound_used, 4);
    }

    #[test]
    fn normalisation_is_sign_symmetric() {
        for c in [-3, -1, 1, 2, 3] {
            let p = normalise_to_one(c);
            assert_eq!(p(c), 1);
            assert_eq!(p(0), 0);
            for x in -3..=3 {
                assert_eq!(p(-x), -p(x));
                assert!(p(x).abs() <= 3);
            }
        }
    }
}
