//! Plain-text formats for graphs, colourings and partitions.
//!
//! Graph files: `#` comment lines and blank lines are ignored; the first
//! data line is `n m`, followed by exactly `m` lines `u v s` with `s` one of
//! `+`/`-` and 0-based vertices. Colouring files hold `v c` lines sorted by
//! vertex. Partition files hold `PART i:` sections listing vertices, or
//! `FOREST1:`/`FOREST2:` sections with one `u v` edge per line.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::colour::Colouring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::structure::{
    colour_from_acyclic, AcyclicColouring, EdgeForestPair, IndependentForestPartition, Partition,
    VertexForestPartition,
};

/// Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: positive loop")]
    PositiveLoop { line: usize },
    #[error("line {line}: vertex out of range")]
    VertexOutOfRange { line: usize },
    #[error("expected {expected} entries, found {found}")]
    CountMismatch { expected: usize, found: usize },
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn field<T: FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad {what} '{token}'")))
}

fn no_more<'a>(line: usize, mut tokens: impl Iterator<Item = &'a str>) -> Result<(), ParseError> {
    match tokens.next() {
        Some(t) => Err(syntax(line, format!("unexpected '{t}'"))),
        None => Ok(()),
    }
}

pub fn parse_graph_file(text: &str) -> Result<SignedGraph, ParseError> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let mut tokens = header.split_whitespace();
    let n: usize = field(header_line, tokens.next(), "vertex count")?;
    let m: usize = field(header_line, tokens.next(), "edge count")?;
    no_more(header_line, tokens)?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let mut tokens = body.split_whitespace();
        let u: usize = field(line, tokens.next(), "vertex")?;
        let v: usize = field(line, tokens.next(), "vertex")?;
        let sign = match tokens.next() {
            Some("+") => Sign::Positive,
            Some("-") => Sign::Negative,
            Some(t) => return Err(syntax(line, format!("bad sign '{t}'"))),
            None => return Err(syntax(line, "missing sign")),
        };
        no_more(line, tokens)?;
        if u >= n || v >= n {
            return Err(ParseError::VertexOutOfRange { line });
        }
        if u == v && sign.is_positive() {
            return Err(ParseError::PositiveLoop { line });
        }
        edges.push(Edge::new(u, v, sign));
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(SignedGraph::from_edges(n, edges).expect("edges validated above"))
}

/// Inverse of [`parse_graph_file`]; edges keep their stored orientation and
/// order.
pub fn render_graph(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.sign.symbol());
    }
    out
}

pub fn render_colouring(phi: &Colouring) -> String {
    let mut out = String::new();
    for (v, c) in phi.values().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}

/// Expects every vertex `0..len` exactly once, in order.
pub fn parse_colouring(text: &str) -> Result<Colouring, ParseError> {
    let mut values = Vec::new();
    for (line, body) in data_lines(text) {
        let mut tokens = body.split_whitespace();
        let v: usize = field(line, tokens.next(), "vertex")?;
        let c: i32 = field(line, tokens.next(), "colour")?;
        no_more(line, tokens)?;
        if v != values.len() {
            return Err(syntax(line, format!("expected vertex {}, found {v}", values.len())));
        }
        values.push(c);
    }
    Ok(Colouring::new(values))
}

/// Raw contents of a partition file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartitionFile {
    /// `PART i:` sections indexed by `i`; missing indices are empty.
    pub parts: Vec<Vec<usize>>,
    pub forest1: Vec<(usize, usize)>,
    pub forest2: Vec<(usize, usize)>,
}

enum Section {
    None,
    Part(usize),
    Forest(u8),
}

pub fn parse_partition_file(text: &str) -> Result<PartitionFile, ParseError> {
    let mut file = PartitionFile::default();
    let mut section = Section::None;
    for (line, body) in data_lines(text) {
        let mut rest = body;
        if let Some(head) = body.strip_prefix("PART") {
            let (index, tail) = head
                .split_once(':')
                .ok_or_else(|| syntax(line, "expected 'PART i:'"))?;
            let i: usize = field(line, Some(index.trim()), "part index")?;
            if file.parts.len() <= i {
                file.parts.resize(i + 1, Vec::new());
            }
            section = Section::Part(i);
            rest = tail;
        } else if let Some(tail) = body.strip_prefix("FOREST1:") {
            section = Section::Forest(1);
            rest = tail;
        } else if let Some(tail) = body.strip_prefix("FOREST2:") {
            section = Section::Forest(2);
            rest = tail;
        }
        if rest.trim().is_empty() {
            continue;
        }
        match section {
            Section::None => return Err(syntax(line, "data before any section header")),
            Section::Part(i) => {
                for token in rest.split_whitespace() {
                    let v = field(line, Some(token), "vertex")?;
                    file.parts[i].push(v);
                }
            }
            Section::Forest(k) => {
                let mut tokens = rest.split_whitespace();
                let u = field(line, tokens.next(), "vertex")?;
                let v = field(line, tokens.next(), "vertex")?;
                no_more(line, tokens)?;
                if k == 1 {
                    file.forest1.push((u, v));
                } else {
                    file.forest2.push((u, v));
                }
            }
        }
    }
    Ok(file)
}

/// How a partition file is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionFileKind {
    /// `PART i` is the `i`-th vertex class inducing a forest.
    VertexForests,
    /// `FOREST1`/`FOREST2` edge lists.
    TwoEdgeForests,
    /// `PART 0` is the independent set, `PART 1` the forest side.
    IndependentForest,
    /// `PART i` is colour class `i + 1` of an acyclic colouring.
    Acyclic,
}

impl FromStr for PartitionFileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex-forests" => Ok(PartitionFileKind::VertexForests),
            "two-edge-forests" => Ok(PartitionFileKind::TwoEdgeForests),
            "independent-forest" => Ok(PartitionFileKind::IndependentForest),
            "acyclic" => Ok(PartitionFileKind::Acyclic),
            other => Err(Error::InvalidPartition(format!("unknown partition kind '{other}'"))),
        }
    }
}

impl PartitionFile {
    /// Maps edge lines to edge indices of `g`. Parallel edges are consumed
    /// in index order, so a pair listed twice takes both copies.
    fn edge_indices(g: &SignedGraph, pairs: &[(usize, usize)], used: &mut [bool]) -> Result<Vec<usize>> {
        pairs
            .iter()
            .map(|&(u, v)| {
                let found = (0..g.edge_count()).find(|&i| {
                    let e = g.edge(i);
                    !used[i] && ((e.u, e.v) == (u, v) || (e.v, e.u) == (u, v))
                });
                let i = found.ok_or_else(|| {
                    Error::InvalidForestPair(format!("no unused edge ({u}, {v})"))
                })?;
                used[i] = true;
                Ok(i)
            })
            .collect()
    }

    pub fn to_edge_forests(&self, g: &SignedGraph) -> Result<EdgeForestPair> {
        let mut used = vec![false; g.edge_count()];
        Ok(EdgeForestPair {
            first: Self::edge_indices(g, &self.forest1, &mut used)?,
            second: Self::edge_indices(g, &self.forest2, &mut used)?,
        })
    }

    pub fn to_vertex_forests(&self) -> VertexForestPartition {
        VertexForestPartition {
            parts: self.parts.clone(),
        }
    }

    pub fn to_independent_forest(&self) -> Result<IndependentForestPartition> {
        if self.parts.len() > 2 {
            return Err(Error::InvalidPartition("expected PART 0 and PART 1 only".into()));
        }
        let part = |i: usize| self.parts.get(i).cloned().unwrap_or_default();
        Ok(IndependentForestPartition {
            independent: part(0),
            forest: part(1),
        })
    }

    pub fn to_acyclic(&self, n: usize) -> Result<AcyclicColouring> {
        let mut values = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if values[v] != 0 {
                    return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
                }
                values[v] = i + 1;
            }
        }
        if let Some(v) = values.iter().position(|&c| c == 0) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(AcyclicColouring {
            values,
            colours: self.parts.len(),
        })
    }

    /// Runs the colouring construction matching `kind`.
    pub fn colour(&self, g: &SignedGraph, kind: PartitionFileKind) -> Result<Colouring> {
        match kind {
            PartitionFileKind::VertexForests => Partition::VertexForests(self.to_vertex_forests()).colour(g),
            PartitionFileKind::TwoEdgeForests => Partition::EdgeForests(self.to_edge_forests(g)?).colour(g),
            PartitionFileKind::IndependentForest => {
                Partition::IndependentForest(self.to_independent_forest()?).colour(g)
            }
            PartitionFileKind::Acyclic => colour_from_acyclic(g, &self.to_acyclic(g.vertex_count())?),
        }
    }
}
