#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vminor::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graph built from upper-triangle bits in graph6 column order.
pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for y in 1..n {
        for x in 0..y {
            if bits[k] {
                edges.push((x, y));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.gen_bool(p))
        .collect();
    from_bits(n, &bits)
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(any::<bool>(), n)).prop_map(|(g, keep)| {
            let s: VertexSet = keep
                .iter()
                .enumerate()
                .filter(|(_, &k)| k)
                .map(|(v, _)| v)
                .collect();
            (g, s)
        })
    })
}

pub fn graph_and_vertex(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph_strategy(max_n)
        .prop_filter("needs a vertex", |g| g.n() > 0)
        .prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 0..n)
        })
}

/// Upper-triangle string under the relabeling `order` (position i holds
/// vertex order[i]).
pub fn string_under(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut s = Vec::new();
    for y in 1..n {
        for x in 0..y {
            s.push(g.has_edge(order[x], order[y]));
        }
    }
    s
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Largest min(|A|, |B|) per kind (anticomplete, complete), by trying every
/// assignment of vertices to A, B or neither.
pub fn brute_force_pair_t(g: &Graph) -> (usize, usize) {
    let n = g.n();
    let mut best = (0, 0);
    let mut assign = vec![0u8; n];
    loop {
        let a: Vec<usize> = (0..n).filter(|&v| assign[v] == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| assign[v] == 2).collect();
        let t = a.len().min(b.len());
        if t > best.0 && a.iter().all(|&x| b.iter().all(|&y| !g.has_edge(x, y))) {
            best.0 = t;
        }
        if t > best.1 && a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y))) {
            best.1 = t;
        }
        // next assignment in base 3
        let mut i = 0;
        while i < n && assign[i] == 2 {
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        assign[i] += 1;
    }
}
