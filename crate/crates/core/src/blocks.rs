//! Cut vertices and blocks of the underlying graph (low-point method).

use std::collections::BTreeSet;

use crate::graph::SignedGraph;

/// Block decomposition: the maximal 2-connected pieces (bridges and
/// isolated vertices count as blocks) and the vertices shared between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCut {
    /// Sorted.
    pub cut_vertices: Vec<usize>,
    /// Each block's vertices, sorted; blocks in order of completion.
    pub blocks: Vec<Vec<usize>>,
}

struct Dfs<'a> {
    adj: &'a [Vec<usize>],
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    cuts: BTreeSet<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        let mut children = 0;
        for &w in &self.adj[u] {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                children += 1;
                self.edge_stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(u);
                    }
                    self.pop_block(u, w);
                }
            } else if self.disc[w] < self.disc[u] {
                self.low[u] = self.low[u].min(self.disc[w]);
                self.edge_stack.push((u, w));
            }
        }
    }

    fn pop_block(&mut self, u: usize, w: usize) {
        let mut block = BTreeSet::new();
        while let Some((a, b)) = self.edge_stack.pop() {
            block.insert(a);
            block.insert(b);
            if (a, b) == (u, w) {
                break;
            }
        }
        self.blocks.push(block.into_iter().collect());
    }
}

pub fn block_cut(g: &SignedGraph) -> BlockCut {
    let adj = g.underlying_adjacency();
    let n = g.vertex_count();
    let mut dfs = Dfs {
        adj: &adj,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        cuts: BTreeSet::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if adj[v].is_empty() {
                dfs.blocks.push(vec![v]);
                dfs.disc[v] = usize::MAX;
                continue;
            }
            dfs.visit(v, None);
        }
    }
    BlockCut {
        cut_vertices: dfs.cuts.into_iter().collect(),
        blocks: dfs.blocks,
    }
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &SignedGraph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && block_cut(g).cut_vertices.is_empty()
}

/// Whether the underlying graph minus `removed` is connected (an empty
/// remainder counts as connected).
pub fn connected_without(g: &SignedGraph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !gone[v]) else {
        return true;
    };
    let mut seen = gone.clone();
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for (w, _) in g.neighbours(u) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached + removed.iter().collect::<BTreeSet<_>>().len() == n
}
