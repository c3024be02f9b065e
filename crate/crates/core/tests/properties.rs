mod common;

use common::*;
use proptest::prelude::*;
use vminor::cut_rank::{cross_twin_blocks, cut_rank};
use vminor::graph6::{parse_graph6, write_graph6};
use vminor::iso::{is_isomorphic, is_isomorphism};
use vminor::lc::{lc_orbit, local_complement, smooth_maximally};
use vminor::pairs::{alpha, max_balanced_homogeneous_pair, omega, PairMode};
use vminor::vertex_minor::{is_vertex_minor, verify_witness, Strategy};
use vminor::{Graph, VertexSet};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(14)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_keeps_exactly_the_inner_edges((g, s) in graph_and_subset(12)) {
        let (sub, labels) = g.induced_subgraph(&s).unwrap();
        prop_assert_eq!(sub.n(), s.len());
        let inner = g.edges().into_iter().filter(|&(x, y)| s.contains(x) && s.contains(y)).count();
        prop_assert_eq!(sub.edge_count(), inner);
        for (i, j) in sub.edges() {
            prop_assert!(g.has_edge(labels[i], labels[j]));
        }
    }

    #[test]
    fn subdivision_counts(g in graph_strategy(7), seed in any::<u64>()) {
        let mut r = rng(seed);
        let counts: Vec<usize> = (0..g.edge_count()).map(|_| rand::Rng::gen_range(&mut r, 0..3)).collect();
        let s = g.subdivide(&counts).unwrap();
        let extra: usize = counts.iter().sum();
        prop_assert_eq!(s.n(), g.n() + extra);
        prop_assert_eq!(s.edge_count(), g.edge_count() + extra);
        for v in g.n()..s.n() {
            prop_assert_eq!(s.degree(v), 2);
        }
    }

    #[test]
    fn isomorphism_is_symmetric_and_verified(g in graph_strategy(7), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut r);
        let h = Graph::new(g.n(), g.edges().into_iter().map(|(x, y)| (perm[x], perm[y]))).unwrap();
        let map = is_isomorphic(&g, &h).expect("relabeled copy");
        prop_assert!(is_isomorphism(&g, &h, &map));
        prop_assert!(is_isomorphic(&h, &g).is_some());
        prop_assert_eq!(is_isomorphic(&g, &g), Some((0..g.n()).collect::<Vec<_>>()));
        let other = random_graph(&mut r, g.n());
        prop_assert_eq!(is_isomorphic(&g, &other).is_some(), is_isomorphic(&other, &g).is_some());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let s = write_graph6(&g).unwrap();
        prop_assert_eq!(s.len(), 1 + (g.n() * g.n().saturating_sub(1) / 2).div_ceil(6));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn lc_involution_and_locality((g, v) in graph_and_vertex(12)) {
        let once = local_complement(&g, v).unwrap();
        prop_assert_eq!(local_complement(&once, v).unwrap(), g.clone());
        let nbrs: VertexSet = g.neighbors(v).collect();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let inside = nbrs.contains(x) && nbrs.contains(y);
                prop_assert_eq!(once.has_edge(x, y) != g.has_edge(x, y), inside);
            }
        }
    }

    #[test]
    fn lc_complements_the_neighborhood((g, v) in graph_and_vertex(12)) {
        let nbrs: VertexSet = g.neighbors(v).collect();
        let (before, _) = g.induced_subgraph(&nbrs).unwrap();
        let (after, _) = local_complement(&g, v).unwrap().induced_subgraph(&nbrs).unwrap();
        prop_assert_eq!(after, before.complement());
    }

    #[test]
    fn lc_commutes_with_deleting_another_vertex((g, v) in graph_and_vertex(10), x in 0usize..10) {
        prop_assume!(x < g.n() && x != v);
        let left = local_complement(&g.delete_vertex(x).unwrap(), if v > x { v - 1 } else { v }).unwrap();
        let right = local_complement(&g, v).unwrap().delete_vertex(x).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lc_preserves_cut_rank((g, x) in graph_and_subset(10), v in 0usize..10) {
        prop_assume!(v < g.n());
        let after = local_complement(&g, v).unwrap();
        prop_assert_eq!(cut_rank(&after, &x).unwrap(), cut_rank(&g, &x).unwrap());
    }

    #[test]
    fn cut_rank_symmetry_bounds_and_blocks((g, x) in graph_and_subset(10)) {
        let co = x.complement_in(g.n());
        let rank = cut_rank(&g, &x).unwrap();
        prop_assert_eq!(rank, cut_rank(&g, &co).unwrap());
        prop_assert!(rank <= x.len().min(co.len()));
        let p = cross_twin_blocks(&g, &x).unwrap();
        prop_assert!(p.blocks.len() <= 1 << rank);
        prop_assert!(p.co_blocks.len() <= 1 << rank);
        for pair in p.block_pairs() {
            prop_assert!(pair.holds_in(&g));
        }
    }

    #[test]
    fn pair_duality_and_bounds(g in graph_strategy(10)) {
        let t = |g: &Graph| max_balanced_homogeneous_pair(g, PairMode::Exact).unwrap().pair.t();
        let (anti, comp) = brute_force_pair_t(&g);
        let (co_anti, co_comp) = brute_force_pair_t(&g.complement());
        prop_assert_eq!(comp, co_anti);
        prop_assert_eq!(anti, co_comp);
        prop_assert_eq!(t(&g), t(&g.complement()));
        prop_assert!(t(&g) <= g.n() / 2);
        let h = max_balanced_homogeneous_pair(&g, PairMode::Heuristic).unwrap();
        prop_assert!(h.pair.holds_in(&g));
        prop_assert!(h.pair.t() <= t(&g));
    }

    #[test]
    fn alpha_is_omega_of_complement(g in graph_strategy(14)) {
        prop_assert_eq!(alpha(&g).unwrap(), omega(&g.complement()).unwrap());
    }

    #[test]
    fn orbit_members_share_the_orbit(g in graph_strategy(5)) {
        let orbit = lc_orbit(&g, 100_000).unwrap();
        prop_assert!(!orbit.truncated);
        let mut base = orbit.graphs.clone();
        base.sort();
        for member in orbit.graphs.iter().step_by(7) {
            let mut other = lc_orbit(member, 100_000).unwrap().graphs;
            other.sort();
            prop_assert_eq!(&other, &base);
        }
    }

    #[test]
    fn induced_subgraphs_are_vertex_minors((g, s) in graph_and_subset(6)) {
        let (h, _) = g.induced_subgraph(&s).unwrap();
        let r = is_vertex_minor(&h, &g, Strategy::Interleaved).unwrap();
        prop_assert!(verify_witness(&h, &g, r.witness().expect("induced subgraph")));
    }

    #[test]
    fn smoothing_trace_replays(g in graph_strategy(8)) {
        let (result, trace) = smooth_maximally(&g);
        prop_assert_eq!(trace.replay(&g).unwrap().result(), result);
    }
}

#[test]
fn uniform_graphs_have_half_size_pairs() {
    for n in 0..=12 {
        for g in [Graph::complete(n), Graph::empty(n)] {
            let r = max_balanced_homogeneous_pair(&g, PairMode::Exact).unwrap();
            assert_eq!(r.pair.t(), n / 2);
        }
    }
}
