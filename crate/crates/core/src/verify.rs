//! Exhaustive enumeration of small signed graphs modulo switching, and
//! automated checks of the colouring theorems over the enumerated corpus.
//!
//! Underlying graphs are enumerated labelled (no isomorphism rejection).
//! For each one a breadth-first spanning forest is fixed with positive
//! tree edges and every sign pattern on the co-tree edges is emitted, which
//! gives exactly one graph per switching class for simple graphs.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::brooks::{brooks_colour, classify_exceptional, colour_complete};
use crate::colour::{
    check_proper, chromatic_number, degeneracy_ordering, find_n_colouring, gamma_pair,
    greedy_colour, greedy_colour_in, switch_colouring, underlying_chromatic_number, ColourSet,
    Colouring,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, SwitchSet};
use crate::io::render_graph;
use crate::structure::construct_sharpness_graph;

/// Default hard cap on exhaustive enumeration.
pub const DEFAULT_VERTEX_CAP: usize = 6;
/// Enumerations from this many vertices up need `long_run`.
pub const LONG_RUN_THRESHOLD: usize = 6;
/// Largest `n` for the signed `K_n` family.
pub const COMPLETE_CAP: usize = 7;
/// Largest `n` of the extremal family `G_n` that is checked.
pub const SHARPNESS_MAX_N: usize = 3;
/// Supplied planar graphs with at most this many co-tree edges are checked
/// in every switching class, not only with their given signature.
pub const PLANAR_CLASS_LIMIT: usize = 10;

/// Which graphs to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub max_vertices: usize,
    pub connected_only: bool,
    pub simple_only: bool,
    /// Largest number of parallel edges per vertex pair when
    /// `simple_only` is false (loops are never generated).
    pub max_multiplicity: usize,
    pub long_run: bool,
    pub cap: usize,
}

impl EnumerationSpec {
    pub fn new(max_vertices: usize) -> Self {
        EnumerationSpec {
            max_vertices,
            connected_only: false,
            simple_only: true,
            max_multiplicity: 1,
            long_run: false,
            cap: DEFAULT_VERTEX_CAP,
        }
    }

    /// Connected simple graphs on at most `max_vertices` vertices.
    pub fn connected_simple(max_vertices: usize) -> Self {
        EnumerationSpec {
            connected_only: true,
            ..Self::new(max_vertices)
        }
    }

    /// Loopless multigraphs with up to `multiplicity` parallel edges.
    pub fn multigraphs(max_vertices: usize, multiplicity: usize) -> Self {
        EnumerationSpec {
            simple_only: false,
            max_multiplicity: multiplicity,
            ..Self::new(max_vertices)
        }
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn long_run(mut self, yes: bool) -> Self {
        self.long_run = yes;
        self
    }

    fn multiplicity(&self) -> usize {
        if self.simple_only {
            1
        } else {
            self.max_multiplicity.max(1)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let limit = if self.long_run {
            self.cap
        } else {
            self.cap.min(LONG_RUN_THRESHOLD - 1)
        };
        if self.max_vertices > limit {
            return Err(Error::CapExceeded {
                requested: self.max_vertices,
                cap: limit,
            });
        }
        Ok(())
    }
}

/// One signed graph per switching class (up to duplicates for multigraphs
/// whose tree pairs carry both signs) for every labelled underlying graph
/// admitted by `spec`, in deterministic order.
pub fn enumerate_signed_graphs(spec: &EnumerationSpec) -> Result<impl Iterator<Item = SignedGraph>> {
    spec.validate()?;
    let spec = *spec;
    Ok((1..=spec.max_vertices).flat_map(move |n| {
        underlying_graphs(n, spec.multiplicity(), spec.connected_only)
            .flat_map(move |pairs| Signatures::new(n, pairs))
    }))
}

/// Every switching class of signed `K_n`.
pub fn complete_signed_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push(((u, v), 1));
        }
    }
    Signatures::new(n, pairs)
}

/// Vertex pairs with multiplicities, for every multiplicity vector over the
/// pairs of `0..n` in mixed-radix order.
fn underlying_graphs(
    n: usize,
    multiplicity: usize,
    connected_only: bool,
) -> impl Iterator<Item = Vec<((usize, usize), usize)>> {
    let mut all_pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            all_pairs.push((u, v));
        }
    }
    let radix = multiplicity + 1;
    let total = radix.pow(all_pairs.len() as u32);
    (0..total).filter_map(move |mut code| {
        let mut pairs = Vec::new();
        for &p in &all_pairs {
            let m = code % radix;
            code /= radix;
            if m > 0 {
                pairs.push((p, m));
            }
        }
        (!connected_only || pairs_connected(n, &pairs)).then_some(pairs)
    })
}

fn pairs_connected(n: usize, pairs: &[((usize, usize), usize)]) -> bool {
    let mut reach = vec![false; n];
    reach[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &((u, v), _) in pairs {
            if reach[u] != reach[v] {
                reach[u] = true;
                reach[v] = true;
                changed = true;
            }
        }
    }
    reach.into_iter().all(|r| r)
}

/// Sign patterns per vertex pair. Tree pairs are normalised to be
/// non-negative; co-tree pairs range over every sign multiset.
fn pair_options(multiplicity: usize, tree: bool) -> Vec<Vec<Sign>> {
    (0..=multiplicity)
        .map(|negatives| {
            let mut signs = vec![Sign::Positive; multiplicity - negatives];
            signs.extend(std::iter::repeat_n(Sign::Negative, negatives));
            signs
        })
        .filter(|signs| !tree || signs.iter().any(|s| s.is_positive()))
        .collect()
}

struct Signatures {
    n: usize,
    pairs: Vec<(usize, usize)>,
    options: Vec<Vec<Vec<Sign>>>,
    counter: Vec<usize>,
    done: bool,
}

impl Signatures {
    fn new(n: usize, pairs: Vec<((usize, usize), usize)>) -> Self {
        // Breadth-first spanning forest over the pairs, lowest vertex first.
        let mut adj = vec![Vec::new(); n];
        for (i, &((u, v), _)) in pairs.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let mut tree = vec![false; pairs.len()];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(w, i) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        tree[i] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let options = pairs
            .iter()
            .zip(&tree)
            .map(|(&(_, m), &t)| pair_options(m, t))
            .collect::<Vec<_>>();
        Signatures {
            n,
            counter: vec![0; pairs.len()],
            pairs: pairs.into_iter().map(|(p, _)| p).collect(),
            options,
            done: false,
        }
    }
}

impl Iterator for Signatures {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.done {
            return None;
        }
        let mut edges = Vec::new();
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            for &s in &self.options[i][self.counter[i]] {
                edges.push(Edge::new(u, v, s));
            }
        }
        let g = SignedGraph::from_edges(self.n, edges).expect("enumerated graph is valid");
        self.done = true;
        for i in 0..self.counter.len() {
            self.counter[i] += 1;
            if self.counter[i] < self.options[i].len() {
                self.done = false;
                break;
            }
            self.counter[i] = 0;
        }
        Some(g)
    }
}

/// Theorem identifiers accepted by [`verify_theorem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Brooks,
    Bound2Chi,
    Antibalance,
    GammaIdentity,
    Complete,
    Degeneracy,
    Sharpness,
    SwitchingInvariance,
    PlanarConjecture,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Brooks,
        TheoremId::Bound2Chi,
        TheoremId::Antibalance,
        TheoremId::GammaIdentity,
        TheoremId::Complete,
        TheoremId::Degeneracy,
        TheoremId::Sharpness,
        TheoremId::SwitchingInvariance,
        TheoremId::PlanarConjecture,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Brooks => "brooks",
            TheoremId::Bound2Chi => "bound_2chi",
            TheoremId::Antibalance => "antibalance",
            TheoremId::GammaIdentity => "gamma_identity",
            TheoremId::Complete => "complete",
            TheoremId::Degeneracy => "degeneracy",
            TheoremId::Sharpness => "sharpness",
            TheoremId::SwitchingInvariance => "switching_invariance",
            TheoremId::PlanarConjecture => "planar_conjecture",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: SignedGraph,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub instances_checked: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
    /// One summary per checked instance; filled only in verbose mode.
    pub instance_lines: Vec<String>,
}

impl VerificationReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "theorem: {}\ninstances: {}\nresult: {}\n",
            self.theorem,
            self.instances_checked,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        if let Some(c) = &self.counterexample {
            out.push_str(&format!("counterexample: {}\n", c.details));
            out.push_str(&render_graph(&c.graph));
        }
        out
    }

    /// Machine-readable lines: one per instance, then a summary line.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for line in &self.instance_lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!(
            "summary\t{}\t{}\t{}\n",
            self.theorem,
            self.instances_checked,
            if self.passed { "pass" } else { "fail" }
        ));
        out
    }
}

type Check = std::result::Result<String, String>;
type Instances = Box<dyn Iterator<Item = SignedGraph>>;

/// Runs theorem checks with configurable parallelism and inputs.
#[derive(Debug, Clone)]
pub struct Verifier {
    spec: EnumerationSpec,
    planar: Vec<(String, SignedGraph)>,
    jobs: Option<usize>,
    verbose: bool,
}

const CHUNK: usize = 4096;

impl Verifier {
    pub fn new(spec: EnumerationSpec) -> Self {
        Verifier {
            spec,
            planar: Vec::new(),
            jobs: None,
            verbose: false,
        }
    }

    /// Named graphs for `planar_conjecture`; they are trusted to be planar.
    pub fn with_planar_graphs(mut self, graphs: Vec<(String, SignedGraph)>) -> Self {
        self.planar = graphs;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs.max(1));
        self
    }

    pub fn verbose(mut self, yes: bool) -> Self {
        self.verbose = yes;
        self
    }

    pub fn run(&self, theorem: TheoremId) -> Result<VerificationReport> {
        match self.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::PreconditionViolated(e.to_string()))?
                .install(|| self.run_inner(theorem)),
            None => self.run_inner(theorem),
        }
    }

    fn run_inner(&self, theorem: TheoremId) -> Result<VerificationReport> {
        let mut notes = Vec::new();
        let (instances, check): (Instances, fn(&SignedGraph) -> Check) =
            match theorem {
                TheoremId::Brooks => {
                    let spec = EnumerationSpec {
                        connected_only: true,
                        simple_only: true,
                        ..self.spec
                    };
                    (Box::new(enumerate_signed_graphs(&spec)?), check_brooks)
                }
                TheoremId::Bound2Chi => (Box::new(enumerate_signed_graphs(&self.spec)?), check_bound_2chi),
                TheoremId::Antibalance => (Box::new(enumerate_signed_graphs(&self.spec)?), check_antibalance),
                TheoremId::GammaIdentity => (Box::new(enumerate_signed_graphs(&self.spec)?), check_gamma),
                TheoremId::Degeneracy => (Box::new(enumerate_signed_graphs(&self.spec)?), check_degeneracy),
                TheoremId::SwitchingInvariance => {
                    (Box::new(enumerate_signed_graphs(&self.spec)?), check_switching)
                }
                TheoremId::Complete => {
                    let max = self.spec.max_vertices;
                    if max > COMPLETE_CAP {
                        return Err(Error::CapExceeded {
                            requested: max,
                            cap: COMPLETE_CAP,
                        });
                    }
                    (Box::new((1..=max).flat_map(complete_signed_graphs)), check_complete)
                }
                TheoremId::Sharpness => {
                    let family: Vec<SignedGraph> = (1..=SHARPNESS_MAX_N)
                        .map(construct_sharpness_graph)
                        .collect::<Result<_>>()?;
                    (Box::new(family.into_iter()), check_sharpness)
                }
                TheoremId::PlanarConjecture => {
                    if self.planar.is_empty() {
                        return Err(Error::PreconditionViolated("no planar graphs supplied".into()));
                    }
                    let mut all = Vec::new();
                    for (name, g) in &self.planar {
                        euler_guard(name, g)?;
                        let classes = switching_classes_of(g);
                        notes.push(format!("{name}: {} signature(s)", classes.len()));
                        all.extend(classes);
                    }
                    (Box::new(all.into_iter()), check_planar)
                }
            };
        let mut report = self.drive(theorem, instances, check);
        report.notes.splice(0..0, notes);
        Ok(report)
    }

    fn drive(
        &self,
        theorem: TheoremId,
        mut instances: Instances,
        check: fn(&SignedGraph) -> Check,
    ) -> VerificationReport {
        let mut checked = 0;
        let mut lines = Vec::new();
        let mut notes = Vec::new();
        loop {
            let chunk: Vec<SignedGraph> = instances.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let results: Vec<Check> = chunk.par_iter().map(check).collect();
            for (g, r) in chunk.into_iter().zip(results) {
                checked += 1;
                match r {
                    Ok(summary) => {
                        if theorem == TheoremId::Sharpness {
                            notes.push(summary.clone());
                        }
                        if self.verbose {
                            lines.push(format!("{}\t{}\tok\t{}", theorem, checked - 1, summary));
                        }
                    }
                    Err(details) => {
                        if self.verbose {
                            lines.push(format!("{}\t{}\tfail\t{}", theorem, checked - 1, details));
                        }
                        return VerificationReport {
                            theorem,
                            instances_checked: checked,
                            passed: false,
                            counterexample: Some(Counterexample { graph: g, details }),
                            notes,
                            instance_lines: lines,
                        };
                    }
                }
            }
        }
        VerificationReport {
            theorem,
            instances_checked: checked,
            passed: true,
            counterexample: None,
            notes,
            instance_lines: lines,
        }
    }
}

/// Runs one theorem over `spec` with default settings.
pub fn verify_theorem(theorem: TheoremId, spec: &EnumerationSpec) -> Result<VerificationReport> {
    Verifier::new(*spec).run(theorem)
}

fn describe(g: &SignedGraph) -> String {
    format!("n={} m={}", g.vertex_count(), g.edge_count())
}

fn check_brooks(g: &SignedGraph) -> Check {
    let chi = chromatic_number(g).chi;
    let delta = g.max_degree();
    let class = classify_exceptional(g).map_err(|e| e.to_string())?;
    let ok = if class.is_exceptional() {
        chi == delta + 1
    } else {
        chi <= delta
    };
    if !ok {
        return Err(format!("chi={chi} delta={delta} class={class}"));
    }
    let cert = brooks_colour(g).map_err(|e| format!("brooks_colour failed: {e}"))?;
    let expected_bound = if class.is_exceptional() { delta + 1 } else { delta };
    if cert.bound_used != expected_bound || cert.exceptional != class || chi > cert.bound_used {
        return Err(format!(
            "certificate bound {} class {} disagrees with chi={chi} delta={delta} class={class}",
            cert.bound_used, cert.exceptional
        ));
    }
    Ok(format!("{} delta={delta} chi={chi} class={class}", describe(g)))
}

fn check_bound_2chi(g: &SignedGraph) -> Check {
    // Palettes are nested, so chi <= b exactly when an M_b colouring exists.
    let under = underlying_chromatic_number(g);
    let bound = 2 * under - 1;
    if find_n_colouring(g, bound).is_none() {
        return Err(format!("no colouring into M_{bound}, underlying chi={under}"));
    }
    Ok(format!("{} underlying={under}", describe(g)))
}

fn check_antibalance(g: &SignedGraph) -> Check {
    let two = find_n_colouring(g, 2).is_some();
    let anti = g.is_antibalanced();
    if two != anti {
        return Err(format!("2-colourable={two} antibalanced={anti}"));
    }
    Ok(format!("{} antibalanced={anti}", describe(g)))
}

fn check_gamma(g: &SignedGraph) -> Check {
    let chi = chromatic_number(g).chi;
    let gp = gamma_pair(g);
    if gp.sum() != chi {
        return Err(format!("gamma={} gamma*={} chi={chi}", gp.gamma, gp.gamma_star));
    }
    Ok(format!("{} gamma={} gamma*={} chi={chi}", describe(g), gp.gamma, gp.gamma_star))
}

fn check_complete(g: &SignedGraph) -> Check {
    let n = g.vertex_count();
    let chi = chromatic_number(g).chi;
    let balanced = g.is_balanced();
    if balanced != (chi == n) || (!balanced && chi > n - 1) {
        return Err(format!("n={n} balanced={balanced} chi={chi}"));
    }
    let phi = colour_complete(g).map_err(|e| e.to_string())?;
    let bound = if balanced { n } else { n - 1 };
    let palette = ColourSet::new(bound).map_err(|e| e.to_string())?;
    if check_proper(g, &phi).is_err() || !phi.fits_in(&palette) {
        return Err(format!("colour_complete gave {:?} outside M_{bound}", phi.values()));
    }
    Ok(format!("n={n} balanced={balanced} chi={chi}"))
}

fn check_degeneracy(g: &SignedGraph) -> Check {
    let d = degeneracy_ordering(g);
    let palette = ColourSet::new(d.k + 1).map_err(|e| e.to_string())?;
    let phi = greedy_colour_in(g, &d.order, &palette)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("greedy ran out of M_{}", d.k + 1))?;
    check_proper(g, &phi).map_err(|v| v.to_string())?;
    let unbounded = greedy_colour(g, &d.order).map_err(|e| e.to_string())?;
    check_proper(g, &unbounded).map_err(|v| v.to_string())?;
    Ok(format!("{} k={}", describe(g), d.k))
}

fn check_switching(g: &SignedGraph) -> Check {
    let n = g.vertex_count();
    let base = chromatic_number(g);
    let zeros = Colouring::new(vec![0; n]);
    for mask in 0u32..(1 << n) {
        let s: SwitchSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.switch(&s).map_err(|e| e.to_string())?;
        let chi = chromatic_number(&h).chi;
        if chi != base.chi {
            return Err(format!("switching at {mask:#b} changes chi {} -> {chi}", base.chi));
        }
        if check_proper(&h, &switch_colouring(&base.witness, &s)).is_err() {
            return Err(format!("witness does not transport under {mask:#b}"));
        }
        if check_proper(g, &zeros).is_ok() != check_proper(&h, &zeros).is_ok() {
            return Err(format!("properness of the zero map changes under {mask:#b}"));
        }
    }
    Ok(format!("{} chi={}", describe(g), base.chi))
}

fn check_sharpness(g: &SignedGraph) -> Check {
    let n = (g.vertex_count() as f64).sqrt().round() as usize;
    let chi = chromatic_number(g).chi;
    let under = underlying_chromatic_number(g);
    if chi != 2 * n - 1 || under != n {
        return Err(format!("G_{n}: chi={chi} underlying={under}, expected {} and {n}", 2 * n - 1));
    }
    Ok(format!("G_{n}: chi={chi} underlying={under}"))
}

fn check_planar(g: &SignedGraph) -> Check {
    let chi = chromatic_number(g).chi;
    if chi > 4 {
        return Err(format!("chi={chi} > 4"));
    }
    Ok(format!("{} chi={chi}", describe(g)))
}

fn euler_guard(name: &str, g: &SignedGraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::PreconditionViolated(format!("{name}: planar input must be simple")));
    }
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Err(Error::PreconditionViolated(format!(
            "{name}: {} edges exceed 3n-6 = {}",
            g.edge_count(),
            3 * n - 6
        )));
    }
    Ok(())
}

/// The graph itself, plus every switching class of its underlying graph
/// when the co-tree is small enough.
fn switching_classes_of(g: &SignedGraph) -> Vec<SignedGraph> {
    let (components, _) = g.components();
    let cotree = g.edge_count() + components - g.vertex_count();
    let mut out = vec![g.clone()];
    if cotree <= PLANAR_CLASS_LIMIT {
        let pairs = g.edges().iter().map(|e| ((e.u, e.v), 1)).collect();
        out.extend(Signatures::new(g.vertex_count(), pairs));
    }
    out
}

/// A random connected simple signed graph: a random tree plus each further
/// pair with probability `density`, all signs fair coin flips.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> SignedGraph {
    let sign = |rng: &mut R| {
        if rng.random_bool(0.5) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    };
    let mut adjacent = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        adjacent[u][v] = true;
        edges.push((u, v, sign(rng)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !adjacent[u][v] && rng.random_bool(density) {
                edges.push((u, v, sign(rng)));
            }
        }
    }
    SignedGraph::new(n, edges).expect("random graph is valid")
}

/// Each vertex joins the set with probability one half.
pub fn random_switch_set<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SwitchSet {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}
