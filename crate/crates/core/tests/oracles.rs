//! Checks against independent brute-force or third-party implementations.

mod common;

use std::collections::BTreeSet;

use common::*;
use petgraph::graph6::ToGraph6;
use vminor::cut_rank::cut_rank;
use vminor::enumerate::{enumerate_graphs, enumerate_up_to};
use vminor::graph6::{parse_graph6, write_graph6};
use vminor::iso::is_isomorphic;
use vminor::pairs::{alpha, max_balanced_homogeneous_pair, omega, PairKind, PairMode};
use vminor::vertex_minor::{is_vertex_minor, verify_witness, Strategy};
use vminor::{Graph, VertexSet};

/// Straightforward graph6 writer: collect the bits, pad, chunk by six.
fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for y in 1..n {
        for x in 0..y {
            bits.push(g.has_edge(x, y));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((63 + v) as char);
    }
    s
}

fn petgraph_graph6(g: &Graph) -> String {
    let mut pg = petgraph::Graph::<(), (), petgraph::Undirected>::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for (x, y) in g.edges() {
        pg.add_edge(nodes[x], nodes[y], ());
    }
    pg.graph6_string()
}

#[test]
fn graph6_hand_encodings_match_reference_encoders() {
    let k3 = Graph::complete(3);
    let dqc = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
    let k1 = Graph::empty(1);
    for (g, text) in [(&k3, "Bw"), (&dqc, "DQc"), (&k1, "@")] {
        assert_eq!(reference_graph6(g), text);
        assert_eq!(petgraph_graph6(g), text);
        assert_eq!(write_graph6(g).unwrap(), text);
        assert_eq!(&parse_graph6(text).unwrap(), g);
    }
}

#[test]
fn graph6_agrees_with_reference_on_random_graphs() {
    let mut r = rng(6);
    for _ in 0..500 {
        let n = rand::Rng::gen_range(&mut r, 0..=40);
        let g = random_graph(&mut r, n);
        let s = write_graph6(&g).unwrap();
        assert_eq!(s, reference_graph6(&g));
        assert_eq!(s, petgraph_graph6(&g));
    }
}

#[test]
fn graph6_round_trips_every_labeled_graph_up_to_six_vertices() {
    for n in 0usize..=6 {
        let m = n * n.saturating_sub(1) / 2;
        for code in 0u32..1 << m {
            let bits: Vec<bool> = (0..m).map(|i| code >> i & 1 == 1).collect();
            let g = from_bits(n, &bits);
            let s = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}

#[test]
fn enumeration_matches_brute_force_dedupe() {
    for n in 0usize..=5 {
        let m = n * n.saturating_sub(1) / 2;
        let perms = permutations(n);
        let mut classes = BTreeSet::new();
        for code in 0u32..1 << m {
            let bits: Vec<bool> = (0..m).map(|i| code >> i & 1 == 1).collect();
            let g = from_bits(n, &bits);
            let min = perms.iter().map(|p| string_under(&g, p)).min().unwrap();
            classes.insert(min);
        }
        let ours: BTreeSet<Vec<bool>> = enumerate_graphs(n)
            .unwrap()
            .iter()
            .map(|g| string_under(g, &(0..n).collect::<Vec<_>>()))
            .collect();
        assert_eq!(ours, classes, "n = {n}");
    }
}

#[test]
fn enumeration_of_three_vertices() {
    let g = enumerate_graphs(3).unwrap();
    assert_eq!(g.len(), 4);
    let edge_counts: Vec<usize> = g.iter().map(Graph::edge_count).collect();
    assert_eq!(edge_counts, vec![0, 1, 2, 3]);
    assert_eq!(enumerate_graphs(0).unwrap().len(), 1);
    assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
}

#[test]
fn exact_pair_matches_brute_force() {
    for g in enumerate_up_to(7).unwrap() {
        let (anti, comp) = brute_force_pair_t(&g);
        let r = max_balanced_homogeneous_pair(&g, PairMode::Exact).unwrap();
        assert_eq!(r.pair.t(), anti.max(comp), "{g:?}");
        assert!(r.pair.holds_in(&g));
        let expected_kind = if anti >= comp {
            PairKind::Anticomplete
        } else {
            PairKind::Complete
        };
        if r.pair.t() > 0 {
            assert_eq!(r.pair.kind(), expected_kind);
        }
        assert_eq!(r.pair.a().len(), r.pair.b().len());
    }
}

#[test]
fn frozen_pair_values() {
    // computed with brute_force_pair_t
    assert_eq!(brute_force_pair_t(&Graph::cycle(5)), (1, 1));
    assert_eq!(brute_force_pair_t(&Graph::complete(6)), (0, 3));
    assert_eq!(brute_force_pair_t(&Graph::matching(3)), (2, 1));
    for (g, t) in [
        (Graph::cycle(5), 1),
        (Graph::complete(6), 3),
        (Graph::matching(3), 2),
    ] {
        assert_eq!(
            max_balanced_homogeneous_pair(&g, PairMode::Exact)
                .unwrap()
                .pair
                .t(),
            t
        );
    }
}

#[test]
fn alpha_omega_match_subset_enumeration() {
    let mut r = rng(11);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut r, 0..=10);
        let g = random_graph(&mut r, n);
        let (mut a, mut w) = (0, 0);
        for mask in 0u32..1 << n {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let pairs = || {
                s.iter()
                    .flat_map(|&x| s.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
            };
            if pairs().all(|(x, y)| !g.has_edge(x, y)) {
                a = a.max(s.len());
            }
            if pairs().all(|(x, y)| g.has_edge(x, y)) {
                w = w.max(s.len());
            }
        }
        assert_eq!(alpha(&g).unwrap(), a);
        assert_eq!(omega(&g).unwrap(), w);
    }
    // frozen from the enumeration above
    assert_eq!(
        (
            alpha(&Graph::cycle(5)).unwrap(),
            omega(&Graph::cycle(5)).unwrap()
        ),
        (2, 2)
    );
}

/// Rank as log2 of the size of the row span, found by XOR-ing every subset
/// of rows.
fn span_rank(g: &Graph, x: &VertexSet) -> usize {
    let co = x.complement_in(g.n());
    let rows: Vec<u64> = x
        .iter()
        .map(|v| {
            co.iter()
                .enumerate()
                .fold(0u64, |m, (i, u)| m | (g.has_edge(v, u) as u64) << i)
        })
        .collect();
    let mut span = BTreeSet::new();
    for mask in 0u32..1 << rows.len() {
        span.insert(
            rows.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u64, |acc, (_, r)| acc ^ r),
        );
    }
    span.len().trailing_zeros() as usize
}

#[test]
fn cut_rank_matches_span_enumeration() {
    let mut r = rng(21);
    for _ in 0..2000 {
        let n = rand::Rng::gen_range(&mut r, 0..=10);
        let g = random_graph(&mut r, n);
        let x = random_subset(&mut r, n);
        assert_eq!(cut_rank(&g, &x).unwrap(), span_rank(&g, &x));
    }
    // C5 with X = {0,1}: rows (001), (100) over columns (2,3,4)
    assert_eq!(span_rank(&Graph::cycle(5), &VertexSet::new(vec![0, 1])), 2);
}

#[test]
fn isomorphism_matches_permutation_search() {
    let mut r = rng(31);
    for _ in 0..400 {
        let n = rand::Rng::gen_range(&mut r, 0..=6);
        let g = random_graph(&mut r, n);
        let h = random_graph(&mut r, n);
        let brute = permutations(n).into_iter().find(|p| {
            (0..n).all(|x| (0..n).all(|y| x == y || g.has_edge(x, y) == h.has_edge(p[x], p[y])))
        });
        assert_eq!(is_isomorphic(&g, &h), brute);
    }
}

#[test]
fn strategies_agree_on_small_classes() {
    let hosts = enumerate_up_to(5).unwrap();
    let minors = enumerate_up_to(3).unwrap();
    for g in &hosts {
        for h in &minors {
            let a = is_vertex_minor(h, g, Strategy::Orbit).unwrap();
            let b = is_vertex_minor(h, g, Strategy::Interleaved).unwrap();
            assert_eq!(a.is_present(), b.is_present(), "{h:?} in {g:?}");
            for w in [a.witness(), b.witness()].into_iter().flatten() {
                assert!(verify_witness(h, g, w));
            }
        }
    }
}

#[test]
fn vertex_minor_transitivity_small() {
    let graphs = enumerate_up_to(4).unwrap();
    let contains =
        |h: &Graph, g: &Graph| is_vertex_minor(h, g, Strategy::Orbit).unwrap().is_present();
    for g in &graphs {
        for h in graphs.iter().filter(|h| contains(h, g)) {
            for f in graphs.iter().filter(|f| contains(f, h)) {
                assert!(contains(f, g), "{f:?} <= {h:?} <= {g:?}");
            }
        }
    }
}

#[test]
fn k3_free_iff_max_degree_one_up_to_six() {
    let k3 = Graph::complete(3);
    for g in enumerate_up_to(6).unwrap() {
        let absent = is_vertex_minor(&k3, &g, Strategy::Interleaved)
            .unwrap()
            .is_absent();
        assert_eq!(absent, g.max_degree() <= 1, "{g:?}");
    }
}
