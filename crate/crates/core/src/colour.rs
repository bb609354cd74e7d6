//! Colour sets `M_n`, properness, greedy colouring and the exact solver.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, SwitchSet};

/// Position `i` of the unbounded greedy ladder `0, 1, -1, 2, -2, ...`.
pub fn ladder_colour(i: usize) -> i32 {
    let k = i.div_ceil(2) as i32;
    if i % 2 == 1 {
        k
    } else {
        -k
    }
}

/// The palette `M_n`: `{±1, …, ±k}` for `n = 2k`, `{0, ±1, …, ±k}` for
/// `n = 2k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColourSet {
    n: usize,
}

impl ColourSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositiveN);
        }
        Ok(ColourSet { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Largest absolute value in the set.
    pub fn max_abs(&self) -> i32 {
        (self.n / 2) as i32
    }

    pub fn has_zero(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn contains(&self, c: i32) -> bool {
        if c == 0 {
            self.has_zero()
        } else {
            c.abs() <= self.max_abs()
        }
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<i32> {
        let k = self.max_abs();
        (-k..=k).filter(|&c| self.contains(c)).collect()
    }

    /// Elements by increasing absolute value, positive before negative.
    pub fn ladder(&self) -> Vec<i32> {
        palette_ladder(self.n)
    }
}

/// Shorthand for [`ColourSet::new`].
pub fn colour_set(n: usize) -> Result<ColourSet> {
    ColourSet::new(n)
}

/// Ladder order of `M_n`; empty for `n = 0`.
fn palette_ladder(n: usize) -> Vec<i32> {
    let skip = usize::from(n.is_multiple_of(2));
    (skip..skip + n).map(ladder_colour).collect()
}

/// A total map from vertices to integer colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Colouring(Vec<i32>);

impl Colouring {
    pub fn new(values: Vec<i32>) -> Self {
        Colouring(values)
    }

    pub fn values(&self) -> &[i32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colours_used(&self) -> BTreeSet<i32> {
        self.0.iter().copied().collect()
    }

    pub fn fits_in(&self, palette: &ColourSet) -> bool {
        self.0.iter().all(|&c| palette.contains(c))
    }

    /// Smallest `n` with every colour in `M_n` (0 for the empty colouring).
    pub fn min_palette(&self) -> usize {
        if self.0.is_empty() {
            return 0;
        }
        let k = self.0.iter().map(|c| c.unsigned_abs() as usize).max().unwrap_or(0);
        if self.0.contains(&0) {
            2 * k + 1
        } else {
            2 * k
        }
    }
}

impl Index<usize> for Colouring {
    type Output = i32;

    fn index(&self, v: usize) -> &i32 {
        &self.0[v]
    }
}

impl From<Vec<i32>> for Colouring {
    fn from(values: Vec<i32>) -> Self {
        Colouring(values)
    }
}

/// Why a colouring is not proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Edge `edge = uv` has `φ(u) = σ(e)·φ(v)`.
    Edge { edge: usize, u: usize, v: usize },
    WrongLength { expected: usize, got: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Edge { edge, u, v } => {
                write!(f, "edge #{edge} ({u}, {v}) is not properly coloured")
            }
            Violation::WrongLength { expected, got } => {
                write!(f, "colouring has {got} entries, graph has {expected} vertices")
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Checks `φ(u) ≠ σ(e)·φ(v)` for every edge, loops included. Reports the
/// first violating edge in storage order.
pub fn check_proper(g: &SignedGraph, phi: &Colouring) -> Result<(), Violation> {
    if phi.len() != g.vertex_count() {
        return Err(Violation::WrongLength {
            expected: g.vertex_count(),
            got: phi.len(),
        });
    }
    for (i, e) in g.edges().iter().enumerate() {
        if phi[e.u] == e.sign.apply(phi[e.v]) {
            return Err(Violation::Edge {
                edge: i,
                u: e.u,
                v: e.v,
            });
        }
    }
    Ok(())
}

/// Negates the colour of every vertex in `s`.
pub fn switch_colouring(phi: &Colouring, s: &SwitchSet) -> Colouring {
    Colouring(
        phi.0
            .iter()
            .enumerate()
            .map(|(v, &c)| if s.contains(v) { -c } else { c })
            .collect(),
    )
}

fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidOrder);
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidOrder);
        }
    }
    Ok(())
}

/// Colours still available at `v` given the coloured part of `partial`.
fn forbidden_at(g: &SignedGraph, partial: &[Option<i32>], v: usize) -> BTreeSet<i32> {
    let mut forbidden = BTreeSet::new();
    for (w, s) in g.neighbours(v) {
        if w == v {
            forbidden.insert(0);
        } else if let Some(c) = partial[w] {
            forbidden.insert(s.apply(c));
        }
    }
    forbidden
}

/// Extends `partial` greedily along `order`, giving each uncoloured vertex
/// the first non-forbidden colour of the ladder (restricted to `palette`
/// when given). Returns `false` if the palette runs out.
pub fn greedy_extend(
    g: &SignedGraph,
    partial: &mut [Option<i32>],
    order: &[usize],
    palette: Option<&ColourSet>,
) -> bool {
    let ladder = palette.map(ColourSet::ladder);
    for &v in order {
        if partial[v].is_some() {
            continue;
        }
        let forbidden = forbidden_at(g, partial, v);
        let pick = match &ladder {
            Some(l) => l.iter().copied().find(|c| !forbidden.contains(c)),
            None => (0..).map(ladder_colour).find(|c| !forbidden.contains(c)),
        };
        match pick {
            Some(c) => partial[v] = Some(c),
            None => return false,
        }
    }
    true
}

/// Greedy colouring along `order` with the unbounded ladder
/// `0, 1, -1, 2, -2, …`. A vertex with `j` forbidden colours receives one of
/// the first `j + 1` ladder entries.
pub fn greedy_colour(g: &SignedGraph, order: &[usize]) -> Result<Colouring> {
    check_permutation(g.vertex_count(), order)?;
    let mut partial = vec![None; g.vertex_count()];
    greedy_extend(g, &mut partial, order, None);
    Ok(collect(partial))
}

/// Greedy colouring along `order` using only colours of `palette`, smallest
/// absolute value first. `None` if some vertex finds every colour forbidden.
pub fn greedy_colour_in(
    g: &SignedGraph,
    order: &[usize],
    palette: &ColourSet,
) -> Result<Option<Colouring>> {
    check_permutation(g.vertex_count(), order)?;
    let mut partial = vec![None; g.vertex_count()];
    Ok(greedy_extend(g, &mut partial, order, Some(palette)).then(|| collect(partial)))
}

pub(crate) fn collect(partial: Vec<Option<i32>>) -> Colouring {
    Colouring(
        partial
            .into_iter()
            .map(|c| c.expect("every vertex coloured"))
            .collect(),
    )
}

/// A degeneracy ordering: every vertex has at most `k` edges to earlier
/// vertices (parallel edges counted separately, a loop counted once).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    pub k: usize,
    pub order: Vec<usize>,
}

/// Repeatedly deletes a minimum-degree vertex (lowest index on ties) and
/// reverses the deletion sequence. Signs are ignored.
pub fn degeneracy_ordering(g: &SignedGraph) -> Degeneracy {
    let n = g.vertex_count();
    let mut remaining = vec![true; n];
    let mut deg: Vec<usize> = (0..n)
        .map(|v| g.neighbours(v).count())
        .collect();
    let mut removed = Vec::with_capacity(n);
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| remaining[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        k = k.max(deg[v]);
        remaining[v] = false;
        removed.push(v);
        for (w, _) in g.neighbours(v) {
            if w != v && remaining[w] {
                deg[w] -= 1;
            }
        }
    }
    removed.reverse();
    Degeneracy { k, order: removed }
}

/// Backtracking search for a proper colouring into `M_n`.
///
/// Vertices are visited in degeneracy order and values tried in ladder
/// order. The first vertex is restricted to non-negative colours unless
/// some vertex carries a prescribed colour.
#[derive(Debug, Clone)]
pub struct ColouringSearch<'a> {
    g: &'a SignedGraph,
    n: usize,
    nonzero: Vec<bool>,
    fixed: Vec<Option<i32>>,
}

impl<'a> ColouringSearch<'a> {
    pub fn new(g: &'a SignedGraph, n: usize) -> Self {
        ColouringSearch {
            g,
            n,
            nonzero: vec![false; g.vertex_count()],
            fixed: vec![None; g.vertex_count()],
        }
    }

    /// Require `φ(v) ≠ 0`.
    pub fn forbid_zero(mut self, v: usize) -> Self {
        self.nonzero[v] = true;
        self
    }

    /// Require `φ(v) = c`.
    pub fn fix(mut self, v: usize, c: i32) -> Self {
        self.fixed[v] = Some(c);
        self
    }

    pub fn run(&self) -> Option<Colouring> {
        let nv = self.g.vertex_count();
        if nv == 0 {
            return Some(Colouring::default());
        }
        let ladder = palette_ladder(self.n);
        if ladder.is_empty() {
            return None;
        }
        let adj: Vec<Vec<(usize, i32)>> = (0..nv)
            .map(|v| {
                self.g
                    .neighbours(v)
                    .filter(|&(w, _)| w != v)
                    .map(|(w, s)| (w, s.value()))
                    .collect()
            })
            .collect();
        let nonzero: Vec<bool> = (0..nv)
            .map(|v| self.nonzero[v] || self.g.has_negative_loop(v))
            .collect();
        let order = degeneracy_ordering(self.g).order;
        let state = SearchState {
            adj,
            nonzero,
            fixed: &self.fixed,
            ladder,
            order,
            break_symmetry: self.fixed.iter().all(Option::is_none),
        };
        let mut colours = vec![None; nv];
        state.descend(0, &mut colours).then(|| collect(colours))
    }
}

struct SearchState<'f> {
    adj: Vec<Vec<(usize, i32)>>,
    nonzero: Vec<bool>,
    fixed: &'f [Option<i32>],
    ladder: Vec<i32>,
    order: Vec<usize>,
    break_symmetry: bool,
}

impl SearchState<'_> {
    fn allowed(&self, v: usize, c: i32, colours: &[Option<i32>]) -> bool {
        if c == 0 && self.nonzero[v] {
            return false;
        }
        self.adj[v]
            .iter()
            .all(|&(w, s)| colours[w].is_none_or(|cw| c != s * cw))
    }

    fn descend(&self, depth: usize, colours: &mut [Option<i32>]) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let candidates: &[i32] = match &self.fixed[v] {
            Some(c) => std::slice::from_ref(c),
            None => &self.ladder,
        };
        for &c in candidates {
            if depth == 0 && self.break_symmetry && c < 0 {
                continue;
            }
            if !self.allowed(v, c, colours) {
                continue;
            }
            colours[v] = Some(c);
            if self.descend(depth + 1, colours) {
                return true;
            }
        }
        colours[v] = None;
        false
    }
}

/// A proper colouring into `M_n`, if one exists. `n = 0` only succeeds on
/// the empty graph.
pub fn find_n_colouring(g: &SignedGraph, n: usize) -> Option<Colouring> {
    ColouringSearch::new(g, n).run()
}

/// The chromatic number with a witnessing colouring into `M_chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Colouring,
}

/// Feasibility is monotone in `n`, so the first success is optimal. The
/// empty graph gets `chi = 0`.
pub fn chromatic_number(g: &SignedGraph) -> ChromaticResult {
    let nv = g.vertex_count();
    if nv == 0 {
        return ChromaticResult {
            chi: 0,
            witness: Colouring::default(),
        };
    }
    // Simple graphs are (Δ+1)-colourable greedily. Otherwise distinct
    // non-zero absolute values on all vertices always work.
    let cap = if g.is_simple() {
        g.max_degree() + 1
    } else {
        2 * nv
    };
    for n in 1..=cap {
        if let Some(witness) = find_n_colouring(g, n) {
            return ChromaticResult { chi: n, witness };
        }
    }
    unreachable!("every graph without positive loops is {cap}-colourable")
}

/// Ordinary chromatic number of the underlying simple graph.
pub fn underlying_chromatic_number(g: &SignedGraph) -> usize {
    chromatic_number(&g.underlying_simple()).chi
}

/// The two feasibility thresholds `γ` (colours `{-k..k}`) and `γ*`
/// (zero-free colours `{±1..±k}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaPair {
    pub gamma: usize,
    pub gamma_star: usize,
}

impl GammaPair {
    pub fn sum(&self) -> usize {
        self.gamma + self.gamma_star
    }
}

/// Computes `γ` and `γ*` independently of [`chromatic_number`].
pub fn gamma_pair(g: &SignedGraph) -> GammaPair {
    let gamma = (0..)
        .find(|&k| find_n_colouring(g, 2 * k + 1).is_some())
        .expect("some odd palette works");
    let gamma_star = (0..)
        .find(|&k| find_n_colouring(g, 2 * k).is_some())
        .expect("some even palette works");
    GammaPair { gamma, gamma_star }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{self, Negative as N, Positive as P};

    fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn complete(n: usize, s: Sign) -> SignedGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v, s));
            }
        }
        graph(n, &e)
    }

    fn c4_one_negative() -> SignedGraph {
        graph(4, &[(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)])
    }

    #[test]
    fn colour_set_examples() {
        assert_eq!(colour_set(4).unwrap().elements(), vec![-2, -1, 1, 2]);
        assert_eq!(colour_set(5).unwrap().elements(), vec![-2, -1, 0, 1, 2]);
        assert_eq!(colour_set(1).unwrap().elements(), vec![0]);
        assert_eq!(colour_set(0), Err(Error::NonPositiveN));
        assert_eq!(colour_set(4).unwrap().ladder(), vec![1, -1, 2, -2]);
        assert_eq!(colour_set(5).unwrap().ladder(), vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn proper_examples() {
        let t = complete(3, N);
        assert_eq!(check_proper(&t, &vec![1, 1, 1].into()), Ok(()));
        let e = graph(2, &[(0, 1, P)]);
        assert_eq!(
            check_proper(&e, &vec![2, 2].into()),
            Err(Violation::Edge { edge: 0, u: 0, v: 1 })
        );
        let l = graph(1, &[(0, 0, N)]);
        assert!(check_proper(&l, &vec![0].into()).is_err());
        assert!(check_proper(&l, &vec![3].into()).is_ok());
        assert!(matches!(
            check_proper(&l, &vec![].into()),
            Err(Violation::WrongLength { .. })
        ));
    }

    #[test]
    fn differently_signed_pair_forbids_equal_absolute_values() {
        let g = graph(2, &[(0, 1, P), (0, 1, N)]);
        assert!(check_proper(&g, &vec![1, -1].into()).is_err());
        assert!(check_proper(&g, &vec![1, 1].into()).is_err());
        assert!(check_proper(&g, &vec![1, 2].into()).is_ok());
    }

    #[test]
    fn switch_colouring_examples() {
        let phi: Colouring = vec![1, 2].into();
        let s: SwitchSet = [0].into_iter().collect();
        assert_eq!(switch_colouring(&phi, &s).values(), &[-1, 2]);
        assert_eq!(switch_colouring(&phi, &SwitchSet::new()), phi);
        let z: Colouring = vec![0].into();
        assert_eq!(switch_colouring(&z, &[0].into_iter().collect()), z);
    }

    #[test]
    fn greedy_examples() {
        let path = graph(3, &[(0, 1, P), (1, 2, P)]);
        assert_eq!(greedy_colour(&path, &[0, 1, 2]).unwrap().values(), &[0, 1, 0]);

        let star = graph(4, &[(0, 1, N), (0, 2, N), (0, 3, N)]);
        assert_eq!(
            greedy_colour(&star, &[1, 2, 3, 0]).unwrap().values(),
            &[1, 0, 0, 0]
        );

        let tri = complete(3, P);
        let phi = greedy_colour(&tri, &[2, 0, 1]).unwrap();
        assert_eq!((phi[2], phi[0], phi[1]), (0, 1, -1));
    }

    #[test]
    fn greedy_rejects_bad_order() {
        let g = complete(3, P);
        assert_eq!(greedy_colour(&g, &[0, 0, 1]), Err(Error::InvalidOrder));
        assert_eq!(greedy_colour(&g, &[0, 1]), Err(Error::InvalidOrder));
    }

    #[test]
    fn greedy_in_even_palette_avoids_zero() {
        let path = graph(3, &[(0, 1, P), (1, 2, P)]);
        let phi = greedy_colour_in(&path, &[0, 1, 2], &colour_set(2).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(phi.values(), &[1, -1, 1]);
    }

    #[test]
    fn negative_loop_blocks_zero_in_greedy() {
        let g = graph(1, &[(0, 0, N)]);
        assert_eq!(greedy_colour(&g, &[0]).unwrap().values(), &[1]);
    }

    #[test]
    fn degeneracy_examples() {
        let tree = graph(5, &[(0, 1, P), (1, 2, N), (1, 3, P), (3, 4, P)]);
        assert_eq!(degeneracy_ordering(&tree).k, 1);
        assert_eq!(degeneracy_ordering(&complete(4, P)).k, 3);
        let c4 = graph(4, &[(0, 1, P), (1, 2, P), (2, 3, P), (3, 0, P)]);
        assert_eq!(degeneracy_ordering(&c4).k, 2);
    }

    #[test]
    fn degeneracy_order_respects_k() {
        let g = complete(5, P);
        let d = degeneracy_ordering(&g);
        let mut pos = [0; 5];
        for (i, &v) in d.order.iter().enumerate() {
            pos[v] = i;
        }
        for v in 0..5 {
            let earlier = g.neighbours(v).filter(|&(w, _)| pos[w] < pos[v]).count();
            assert!(earlier <= d.k);
        }
    }

    #[test]
    fn find_examples() {
        assert_eq!(
            find_n_colouring(&SignedGraph::edgeless(1), 1).unwrap().values(),
            &[0]
        );
        assert!(find_n_colouring(&c4_one_negative(), 2).is_none());
        let phi = find_n_colouring(&c4_one_negative(), 3).unwrap();
        assert!(check_proper(&c4_one_negative(), &phi).is_ok());
        assert!(phi.fits_in(&colour_set(3).unwrap()));
    }

    #[test]
    fn search_constraints() {
        let g = graph(2, &[(0, 1, P)]);
        let phi = ColouringSearch::new(&g, 3).forbid_zero(0).run().unwrap();
        assert_ne!(phi[0], 0);
        let phi = ColouringSearch::new(&g, 3).fix(1, 0).run().unwrap();
        assert_eq!(phi[1], 0);
        assert!(ColouringSearch::new(&g, 1).forbid_zero(0).run().is_none());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&complete(4, P)).chi, 4);
        assert_eq!(chromatic_number(&complete(5, N)).chi, 2);
        assert_eq!(chromatic_number(&c4_one_negative()).chi, 3);
        assert_eq!(chromatic_number(&SignedGraph::edgeless(0)).chi, 0);
        assert_eq!(chromatic_number(&SignedGraph::edgeless(3)).chi, 1);
    }

    #[test]
    fn chromatic_multigraph() {
        // A +/- digon forces different absolute values: {0, ±1} works.
        let g = graph(2, &[(0, 1, P), (0, 1, N)]);
        assert_eq!(chromatic_number(&g).chi, 3);
        let l = graph(1, &[(0, 0, N)]);
        assert_eq!(chromatic_number(&l).chi, 2);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma_pair(&complete(3, P)),
            GammaPair {
                gamma: 1,
                gamma_star: 2
            }
        );
        assert_eq!(
            gamma_pair(&complete(2, N)),
            GammaPair {
                gamma: 1,
                gamma_star: 1
            }
        );
        assert_eq!(
            gamma_pair(&SignedGraph::edgeless(3)),
            GammaPair {
                gamma: 0,
                gamma_star: 1
            }
        );
    }

    #[test]
    fn min_palette() {
        assert_eq!(Colouring::new(vec![]).min_palette(), 0);
        assert_eq!(Colouring::new(vec![0, 0]).min_palette(), 1);
        assert_eq!(Colouring::new(vec![1, -1]).min_palette(), 2);
        assert_eq!(Colouring::new(vec![0, -2]).min_palette(), 5);
    }
}
