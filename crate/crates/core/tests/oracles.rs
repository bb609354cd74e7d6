//! Library results against independent brute-force oracles.

use signed_colouring::brooks::{brooks_colour, classify_exceptional, colour_complete, ExceptionalClass};
use signed_colouring::structure::construct_sharpness_graph;
use signed_colouring::verify::{complete_signed_graphs, enumerate_signed_graphs, EnumerationSpec};
use signed_colouring::{
    chromatic_number, find_n_colouring, gamma_pair, Sign, SignedGraph, SwitchSet,
};

fn palette(n: usize) -> Vec<i32> {
    let k = (n / 2) as i32;
    let mut p: Vec<i32> = (1..=k).flat_map(|i| [i, -i]).collect();
    if n % 2 == 1 {
        p.push(0);
    }
    p
}

fn proper(g: &SignedGraph, phi: &[i32]) -> bool {
    g.edges().iter().all(|e| phi[e.u] != e.sign.value() * phi[e.v])
}

/// Does any map `V -> colours` satisfy `g`?
fn some_map(g: &SignedGraph, colours: &[i32]) -> bool {
    let n = g.vertex_count();
    if colours.is_empty() {
        return n == 0;
    }
    let total = colours.len().pow(n as u32);
    (0..total).any(|mut code| {
        let phi: Vec<i32> = (0..n)
            .map(|_| {
                let c = colours[code % colours.len()];
                code /= colours.len();
                c
            })
            .collect();
        proper(g, &phi)
    })
}

fn chi_oracle(g: &SignedGraph) -> usize {
    (0..).find(|&n| some_map(g, &palette(n))).unwrap()
}

fn unsigned_chi_oracle(g: &SignedGraph) -> usize {
    let n = g.vertex_count();
    (1..=n.max(1))
        .find(|&k| {
            (0..k.pow(n as u32)).any(|mut code| {
                let c: Vec<usize> = (0..n)
                    .map(|_| {
                        let x = code % k;
                        code /= k;
                        x
                    })
                    .collect();
                g.edges().iter().all(|e| e.u == e.v || c[e.u] != c[e.v])
            })
        })
        .unwrap()
}

/// Balanced iff some switching makes every edge positive.
fn balanced_oracle(g: &SignedGraph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| {
        let s: SwitchSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        g.switch(&s).unwrap().edges().iter().all(|e| e.sign == Sign::Positive)
    })
}

fn gamma_oracle(g: &SignedGraph) -> (usize, usize) {
    let gamma = (0..)
        .find(|&k: &usize| some_map(g, &(-(k as i32)..=k as i32).collect::<Vec<_>>()))
        .unwrap();
    let gamma_star = (0..)
        .find(|&k: &usize| {
            let colours: Vec<i32> = (1..=k as i32).flat_map(|i| [i, -i]).collect();
            some_map(g, &colours)
        })
        .unwrap();
    (gamma, gamma_star)
}

fn corpus(max: usize) -> Vec<SignedGraph> {
    enumerate_signed_graphs(&EnumerationSpec::new(max)).unwrap().collect()
}

fn small_multigraphs() -> Vec<SignedGraph> {
    use Sign::{Negative as N, Positive as P};
    let mut out: Vec<SignedGraph> = enumerate_signed_graphs(&EnumerationSpec::multigraphs(3, 2))
        .unwrap()
        .collect();
    out.push(SignedGraph::new(2, [(0, 1, P), (0, 1, N), (1, 1, N)]).unwrap());
    out.push(SignedGraph::new(3, [(0, 0, N), (1, 1, N), (2, 2, N), (0, 1, P), (1, 2, N)]).unwrap());
    out.push(SignedGraph::new(1, [(0, 0, N), (0, 0, N)]).unwrap());
    out
}

#[test]
fn chromatic_number_matches_exhaustive_maps() {
    for g in corpus(4).iter().chain(&small_multigraphs()) {
        let r = chromatic_number(g);
        assert_eq!(r.chi, chi_oracle(g), "{g:?}");
        assert!(proper(g, r.witness.values()));
    }
}

#[test]
fn n_colouring_feasibility_matches_oracle() {
    for g in corpus(4) {
        for n in 0..=4 {
            let found = find_n_colouring(&g, n);
            assert_eq!(found.is_some(), some_map(&g, &palette(n)), "n={n} {g:?}");
            if let Some(phi) = found {
                assert!(proper(&g, phi.values()));
                assert!(phi.values().iter().all(|c| palette(n).contains(c)));
            }
        }
    }
}

#[test]
fn balance_matches_switching_oracle() {
    for g in corpus(4).iter().chain(&small_multigraphs()) {
        assert_eq!(g.is_balanced(), balanced_oracle(g), "{g:?}");
        assert_eq!(g.is_antibalanced(), balanced_oracle(&g.negated()), "{g:?}");
        assert!(g.balance().verify(g));
    }
}

#[test]
fn gamma_pair_matches_oracle() {
    for g in corpus(4).iter().chain(&small_multigraphs()) {
        let gp = gamma_pair(g);
        assert_eq!((gp.gamma, gp.gamma_star), gamma_oracle(g), "{g:?}");
    }
}

#[test]
fn theorem_one_bound_against_unsigned_oracle() {
    for g in corpus(4).iter().chain(&small_multigraphs()) {
        if g.is_loopless() {
            assert!(chi_oracle(g) < 2 * unsigned_chi_oracle(g), "{g:?}");
        }
    }
}

#[test]
fn switching_classes_are_distinct_and_complete() {
    // Up to three vertices the stream is one graph per class and covers
    // every signature of every labelled graph.
    let all = corpus(3);
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if a.vertex_count() == b.vertex_count() && a.underlying_simple() == b.underlying_simple() {
                assert!(!a.switching_equivalent(b).unwrap());
            }
        }
    }
    let k3: Vec<_> = all.iter().filter(|g| g.vertex_count() == 3 && g.edge_count() == 3).collect();
    assert_eq!(k3.len(), 2);
    assert_eq!(all.iter().filter(|g| g.vertex_count() == 3).count(), 1 + 3 + 3 + 2);
    let connected = enumerate_signed_graphs(&EnumerationSpec::connected_simple(3)).unwrap().count();
    assert_eq!(connected, 1 + 1 + 3 + 2);
}

#[test]
fn exceptional_classes_match_chromatic_number() {
    for g in enumerate_signed_graphs(&EnumerationSpec::connected_simple(5)).unwrap() {
        let class = classify_exceptional(&g).unwrap();
        let chi = chromatic_number(&g).chi;
        let delta = g.max_degree();
        if class.is_exceptional() {
            assert_eq!(chi, delta + 1);
        } else {
            assert!(chi <= delta, "{g:?}");
        }
        let cert = brooks_colour(&g).unwrap();
        assert!(cert.colouring.min_palette() <= cert.bound_used);
    }
}

#[test]
fn signed_complete_graphs() {
    for n in 1..=5 {
        for g in complete_signed_graphs(n) {
            let chi = chi_oracle(&g);
            assert_eq!(chi == n, balanced_oracle(&g));
            let phi = colour_complete(&g).unwrap();
            assert!(proper(&g, phi.values()));
            assert!(phi.min_palette() <= if g.is_balanced() { n } else { n - 1 });
        }
    }
}

#[test]
fn sharpness_family_values() {
    let g2 = construct_sharpness_graph(2).unwrap();
    assert_eq!(chi_oracle(&g2), 3);
    assert_eq!(unsigned_chi_oracle(&g2), 2);
    let g3 = construct_sharpness_graph(3).unwrap();
    assert_eq!(chromatic_number(&g3).chi, 5);
    assert_eq!(unsigned_chi_oracle(&g3), 3);
}

#[test]
fn named_examples() {
    use Sign::{Negative as N, Positive as P};
    let neg_triangle = SignedGraph::new(3, [(0, 1, N), (1, 2, N), (0, 2, N)]).unwrap();
    assert_eq!(chromatic_number(&neg_triangle).chi, 2);
    assert_eq!(classify_exceptional(&neg_triangle).unwrap(), ExceptionalClass::None);
    let c4 = SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (0, 3, P)]).unwrap();
    assert_eq!(chromatic_number(&c4).chi, 3);
    assert_eq!(classify_exceptional(&c4).unwrap(), ExceptionalClass::UnbalancedEvenCircuit);
}
