//! Cut-rank over GF(2) and twin blocks across a cut.
//!
//! The cut-rank of `X` is the rank of the `X x (V - X)` adjacency matrix
//! over GF(2). Vertices of `X` with equal rows have identical neighborhoods
//! across the cut, so grouping them gives at most `2^rank` blocks per side,
//! and each block of `X` is complete or anticomplete to each block of
//! `V - X`.
//!
//! [`best_balanced_lowrank_pair`] searches every balanced `X` exhaustively.
//! A failed search at small `n` says nothing about rank-width in general.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pairs::{HomogeneousPair, PairKind};

/// Largest host accepted by [`best_balanced_lowrank_pair`].
pub const BALANCED_SEARCH_LIMIT: usize = 20;

/// Rank over GF(2) of word-packed rows. Rows are consumed as scratch space.
pub fn gf2_rank(rows: &mut [Vec<u64>]) -> usize {
    let words = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for w in 0..words {
        for bit in 0..64 {
            let m = 1u64 << bit;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & m != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let (pivot, rest) = rows.split_at_mut(rank + 1);
            let pivot = &pivot[rank];
            for row in rest.iter_mut().filter(|row| row[w] & m != 0) {
                for (x, y) in row[w..].iter_mut().zip(&pivot[w..]) {
                    *x ^= y;
                }
            }
            rank += 1;
            if rank == rows.len() {
                return rank;
            }
        }
    }
    rank
}

/// Single-word rank, used by the exhaustive balanced search.
fn gf2_rank_small(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for row in rows[i + 1..].iter_mut() {
            if *row & low != 0 {
                *row ^= pivot;
            }
        }
    }
    rank
}

fn cross_rows(g: &Graph, x: &VertexSet) -> Vec<Vec<u64>> {
    let co = x.complement_in(g.n()).to_words(g.n());
    x.iter()
        .map(|v| g.row(v).iter().zip(&co).map(|(r, c)| r & c).collect())
        .collect()
}

pub fn cut_rank(g: &Graph, x: &VertexSet) -> Result<usize> {
    x.check_range(g.n())?;
    Ok(gf2_rank(&mut cross_rows(g, x)))
}

/// A cut `(X, V - X)` with its cut-rank and twin blocks on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutProfile {
    pub set: VertexSet,
    pub complement: VertexSet,
    pub rank: usize,
    /// Blocks of `X`, ordered by least member.
    pub blocks: Vec<VertexSet>,
    /// Blocks of `V - X`, ordered by least member.
    pub co_blocks: Vec<VertexSet>,
    /// `adjacent[i][j]` tells whether block `i` of `X` is complete (true) or
    /// anticomplete (false) to block `j` of `V - X`.
    pub adjacent: Vec<Vec<bool>>,
}

impl CutProfile {
    /// Every (block of X, block of V - X) pair with its kind.
    pub fn block_pairs(&self) -> impl Iterator<Item = HomogeneousPair> + '_ {
        self.blocks.iter().enumerate().flat_map(move |(i, a)| {
            self.co_blocks.iter().enumerate().map(move |(j, b)| {
                let kind = if self.adjacent[i][j] {
                    PairKind::Complete
                } else {
                    PairKind::Anticomplete
                };
                HomogeneousPair::unchecked(a.clone(), b.clone(), kind)
            })
        })
    }

    /// The block pair with the largest `min(|A|, |B|)`; ties go to the least
    /// pair (anticomplete first, then by sets).
    pub fn best_block_pair(&self) -> Option<HomogeneousPair> {
        self.block_pairs()
            .min_by(|p, q| q.t().cmp(&p.t()).then_with(|| p.cmp(q)))
    }
}

/// Groups `members` by their neighborhood restricted to `other`.
fn twin_blocks(g: &Graph, members: &VertexSet, other: &[u64]) -> Vec<VertexSet> {
    let mut by_pattern: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for v in members.iter() {
        let pattern: Vec<u64> = g.row(v).iter().zip(other).map(|(r, o)| r & o).collect();
        by_pattern.entry(pattern).or_default().push(v);
    }
    let mut blocks: Vec<VertexSet> = by_pattern.into_values().map(VertexSet::new).collect();
    blocks.sort_by_key(|b| b.as_slice()[0]);
    blocks
}

pub fn cross_twin_blocks(g: &Graph, x: &VertexSet) -> Result<CutProfile> {
    x.check_range(g.n())?;
    let co = x.complement_in(g.n());
    let rank = cut_rank(g, x)?;
    let blocks = twin_blocks(g, x, &co.to_words(g.n()));
    let co_blocks = twin_blocks(g, &co, &x.to_words(g.n()));
    // twins agree across the cut, so one representative per block decides
    let adjacent = blocks
        .iter()
        .map(|a| {
            co_blocks
                .iter()
                .map(|b| g.has_edge(a.as_slice()[0], b.as_slice()[0]))
                .collect()
        })
        .collect();
    Ok(CutProfile {
        set: x.clone(),
        complement: co,
        rank,
        blocks,
        co_blocks,
        adjacent,
    })
}

/// Result of [`best_balanced_lowrank_pair`]: the pair and the cut it came
/// from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedCut {
    pub pair: HomogeneousPair,
    pub set: VertexSet,
    pub rank: usize,
}

/// Over all `X` with `|X| > n/3` and `n - |X| > n/3` and cut-rank at most
/// `k`, returns the twin-block pair maximizing `min(|A|, |B|)`.
///
/// Sets are visited by size, then in increasing bitmask order; the first
/// set reaching the best value wins, and within a set the least block pair
/// wins. Returns `None` when no balanced set has cut-rank at most `k`.
///
/// `None` only says that no balanced set of cut-rank at most `k` exists in
/// this graph; it is not a rank-width certificate.
pub fn best_balanced_lowrank_pair(g: &Graph, k: usize) -> Result<Option<BalancedCut>> {
    let n = g.n();
    if n > BALANCED_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            what:
                "exhaustive balanced cut search (pass an explicit set to cross_twin_blocks instead)",
            n,
            limit: BALANCED_SEARCH_LIMIT,
        });
    }
    let full = (1u64 << n) - 1;
    let masks: Vec<u64> = (0..n).map(|v| g.mask(v)).collect();
    let mut best: Option<BalancedCut> = None;
    let mut rows = Vec::with_capacity(n);
    for size in (0..=n).filter(|&s| 3 * s > n && 3 * (n - s) > n) {
        for x in subsets_of_size(n, size) {
            let co = full & !x;
            rows.clear();
            rows.extend(crate::graph::mask_bits(x).map(|v| masks[v] & co));
            let rank = gf2_rank_small(&mut rows);
            if rank > k {
                continue;
            }
            let set = VertexSet::from_mask(x);
            let profile = cross_twin_blocks(g, &set)?;
            let Some(pair) = profile.best_block_pair() else {
                continue;
            };
            if best.as_ref().is_none_or(|b| pair.t() > b.pair.t()) {
                best = Some(BalancedCut { pair, set, rank });
            }
        }
    }
    Ok(best)
}

/// All `size`-subsets of `0..n` as masks, in increasing numeric order.
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if size == 0 {
        Some(0)
    } else {
        Some((1u64 << size) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some((((ripple ^ cur) >> 2) / low) | ripple)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(cut_rank(&Graph::complete(5), &set(&[0, 1])).unwrap(), 1);
        assert_eq!(cut_rank(&Graph::cycle(5), &set(&[0, 1])).unwrap(), 2);
        assert_eq!(cut_rank(&Graph::cycle(5), &set(&[])).unwrap(), 0);
        assert!(cut_rank(&Graph::cycle(5), &set(&[5])).is_err());
    }

    #[test]
    fn rank_matches_single_word_kernel() {
        let mut rows = vec![vec![0b1011u64], vec![0b0110], vec![0b1101], vec![0b0001]];
        let mut small: Vec<u64> = rows.iter().map(|r| r[0]).collect();
        // row 2 = row 0 xor row 1
        assert_eq!(gf2_rank(&mut rows), 3);
        assert_eq!(gf2_rank_small(&mut small), 3);
    }

    #[test]
    fn rank_across_words() {
        // a perfect matching between {0..70} and {70..140} has full rank
        let n = 140;
        let g = Graph::new(n, (0..70).map(|i| (i, i + 70))).unwrap();
        let x: VertexSet = (0..70).collect();
        assert_eq!(cut_rank(&g, &x).unwrap(), 70);
    }

    #[test]
    fn blocks_of_complete_graph() {
        let p = cross_twin_blocks(&Graph::complete(5), &set(&[0, 1])).unwrap();
        assert_eq!(p.blocks, vec![set(&[0, 1])]);
        assert_eq!(p.co_blocks, vec![set(&[2, 3, 4])]);
        assert_eq!(p.adjacent, vec![vec![true]]);
    }

    #[test]
    fn blocks_of_c5() {
        let p = cross_twin_blocks(&Graph::cycle(5), &set(&[0, 1])).unwrap();
        assert_eq!(p.rank, 2);
        assert_eq!(p.blocks, vec![set(&[0]), set(&[1])]);
        assert_eq!(p.co_blocks, vec![set(&[2]), set(&[3]), set(&[4])]);
        assert!(p.co_blocks.len() <= 1 << p.rank);
    }

    #[test]
    fn zero_rank_gives_single_anticomplete_pair() {
        let g = Graph::matching(2);
        let p = cross_twin_blocks(&g, &set(&[0, 1])).unwrap();
        assert_eq!(p.rank, 0);
        assert_eq!((p.blocks.len(), p.co_blocks.len()), (1, 1));
        assert_eq!(p.adjacent, vec![vec![false]]);
    }

    #[test]
    fn balanced_search_examples() {
        let k6 = best_balanced_lowrank_pair(&Graph::complete(6), 1)
            .unwrap()
            .unwrap();
        assert_eq!(k6.pair.kind(), PairKind::Complete);
        assert!(k6.pair.t() >= 2);

        let m = best_balanced_lowrank_pair(&Graph::matching(3), 1)
            .unwrap()
            .unwrap();
        assert_eq!(m.set, set(&[0, 1, 2]));
        assert_eq!(m.rank, 1);
        assert_eq!(
            m.pair,
            HomogeneousPair::unchecked(set(&[0, 1]), set(&[4, 5]), PairKind::Anticomplete)
        );

        assert_eq!(
            best_balanced_lowrank_pair(&Graph::cycle(5), 0).unwrap(),
            None
        );
        assert!(best_balanced_lowrank_pair(&Graph::empty(21), 1).is_err());
    }

    #[test]
    fn subsets_in_numeric_order() {
        let all: Vec<u64> = subsets_of_size(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
    }
}
