//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! The canonical form of a graph is the relabeling whose upper-triangle
//! string in graph6 column order, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, is
//! lexicographically least over all vertex permutations.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by [`enumerate_graphs`].
pub const ENUMERATION_LIMIT: usize = 8;

/// Largest order handled by [`canonical_form`]; the key must fit a `u64`.
pub const CANONICAL_LIMIT: usize = 11;

/// Minimum-string canonical key and the permutation achieving it:
/// `order[i]` is the original vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    g.require_at_most(CANONICAL_LIMIT, "canonical labeling")?;
    let masks: Vec<u64> = (0..n).map(|v| g.mask(v)).collect();
    let mut search = Canon {
        masks: &masks,
        n,
        best: vec![u64::MAX; n + 1],
        leaf_key: u64::MAX,
        best_order: Vec::new(),
        order: Vec::with_capacity(n),
    };
    search.extend(0, 0);
    Ok((search.leaf_key, search.best_order))
}

struct Canon<'a> {
    masks: &'a [u64],
    n: usize,
    /// `best[d]` is the least key prefix found after placing `d` vertices.
    best: Vec<u64>,
    leaf_key: u64,
    best_order: Vec<usize>,
    order: Vec<usize>,
}

impl Canon<'_> {
    fn extend(&mut self, used: u64, key: u64) {
        let depth = self.order.len();
        if depth == self.n {
            if self.best_order.is_empty() || key < self.leaf_key {
                self.leaf_key = key;
                self.best_order = self.order.clone();
            }
            return;
        }
        // column bits: adjacency of the new vertex to positions 0..depth,
        // position 0 most significant
        let mut cols: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| {
                let col = self
                    .order
                    .iter()
                    .fold(0u64, |c, &p| (c << 1) | (self.masks[v] >> p & 1));
                ((key << depth) | col, v)
            })
            .collect();
        cols.sort_unstable();
        for (next_key, v) in cols {
            if next_key > self.best[depth + 1] {
                break;
            }
            if next_key < self.best[depth + 1] {
                self.best[depth + 1] = next_key;
                for b in &mut self.best[depth + 2..] {
                    *b = u64::MAX;
                }
            }
            self.order.push(v);
            self.extend(used | 1 << v, next_key);
            self.order.pop();
        }
    }
}

/// The canonical relabeling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    Ok(g.induced_ordered(&order))
}

/// One graph per isomorphism class on `n` vertices, each in canonical form,
/// sorted by canonical string.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what:
                "built-in enumeration (supply a graph6 stream from an external generator instead)",
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        level = extend_level(&level, m);
    }
    Ok(level)
}

/// Every graph on `m` vertices is some graph on `m - 1` vertices plus one
/// vertex, so extending each class representative in all ways covers every
/// class on `m` vertices.
fn extend_level(prev: &[Graph], m: usize) -> Vec<Graph> {
    let keyed: Vec<(u64, Graph)> = prev
        .par_iter()
        .flat_map_iter(|g| {
            (0u64..1 << (m - 1)).map(move |nbrs| {
                let h = Graph::from_fn(m, |x, y| {
                    if y == m - 1 {
                        nbrs >> x & 1 == 1
                    } else {
                        g.has_edge(x, y)
                    }
                });
                let (key, order) = canonical_labeling(&h).expect("within canonical limit");
                (key, h.induced_ordered(&order))
            })
        })
        .collect();
    let unique: BTreeMap<u64, Graph> = keyed.into_iter().collect();
    unique.into_values().collect()
}

/// Class representatives for every order in `0..=max_n`, concatenated.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 0..=max_n {
        all.extend(enumerate_graphs(n)?);
    }
    Ok(all)
}
