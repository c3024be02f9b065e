//! Complete and anticomplete pairs, the maximum balanced homogeneous pair,
//! and clique / independence numbers.

use std::fmt;

use crate::cut_rank::cross_twin_blocks;
use crate::error::{Error, Result};
use crate::graph::{mask_bits, Graph, VertexSet};

/// Largest host accepted by the exact pair search.
pub const EXACT_PAIR_LIMIT: usize = 16;

/// Largest host accepted by the clique and independence number routines.
pub const CLIQUE_LIMIT: usize = 64;

/// Anticomplete sorts first, which is also the tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    Anticomplete,
    Complete,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Anticomplete => "anticomplete",
            PairKind::Complete => "complete",
        })
    }
}

/// Disjoint vertex sets `a`, `b` with every cross pair adjacent (complete)
/// or every cross pair non-adjacent (anticomplete). The pair is unordered;
/// it is stored with `a` lexicographically before `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomogeneousPair {
    kind: PairKind,
    a: VertexSet,
    b: VertexSet,
}

impl HomogeneousPair {
    /// Checks disjointness and the kind predicate against `g`.
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet, kind: PairKind) -> Result<Self> {
        let holds = match kind {
            PairKind::Complete => is_complete_pair(g, &a, &b)?,
            PairKind::Anticomplete => is_anticomplete_pair(g, &a, &b)?,
        };
        if !holds {
            return Err(Error::NotHomogeneous(kind.to_string()));
        }
        Ok(Self::unchecked(a, b, kind))
    }

    pub(crate) fn unchecked(a: VertexSet, b: VertexSet, kind: PairKind) -> Self {
        if a <= b {
            HomogeneousPair { kind, a, b }
        } else {
            HomogeneousPair { kind, a: b, b: a }
        }
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    /// Balanced size `min(|A|, |B|)`.
    pub fn t(&self) -> usize {
        self.a.len().min(self.b.len())
    }

    /// Re-checks the pair against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        match self.kind {
            PairKind::Complete => is_complete_pair(g, &self.a, &self.b),
            PairKind::Anticomplete => is_anticomplete_pair(g, &self.a, &self.b),
        }
        .unwrap_or(false)
    }
}

impl fmt::Display for HomogeneousPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} t={} A={} B={}", self.kind, self.t(), self.a, self.b)
    }
}

fn check_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    a.check_range(g.n())?;
    b.check_range(g.n())?;
    match a.iter().find(|&v| b.contains(v)) {
        Some(v) => Err(Error::Overlap(v)),
        None => Ok(()),
    }
}

/// Every vertex of `a` is adjacent to every vertex of `b`. Edges inside
/// `a` or inside `b` play no role.
pub fn is_complete_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    check_pair(g, a, b)?;
    Ok(a.iter().all(|x| b.iter().all(|y| g.has_edge(x, y))))
}

/// No vertex of `a` is adjacent to a vertex of `b`. Edges inside `a` or
/// inside `b` play no role.
pub fn is_anticomplete_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    check_pair(g, a, b)?;
    Ok(a.iter().all(|x| b.iter().all(|y| !g.has_edge(x, y))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairMode {
    Exact,
    Heuristic,
}

impl std::str::FromStr for PairMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(PairMode::Exact),
            "heuristic" => Ok(PairMode::Heuristic),
            other => Err(format!(
                "unknown mode `{other}` (expected exact or heuristic)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSearch {
    pub pair: HomogeneousPair,
    /// True only when the pair is provably optimal.
    pub optimal: bool,
}

/// Maximizes `t = min(|A|, |B|)` over disjoint complete and anticomplete
/// pairs.
///
/// Exact mode returns a balanced pair (`|A| = |B| = t`), choosing among all
/// optimal pairs the anticomplete kind first, then the least `A`, then the
/// least `B`. Heuristic mode returns some valid pair and never claims
/// optimality.
pub fn max_balanced_homogeneous_pair(g: &Graph, mode: PairMode) -> Result<PairSearch> {
    match mode {
        PairMode::Exact => {
            g.require_at_most(EXACT_PAIR_LIMIT, "exact homogeneous pair search")?;
            Ok(PairSearch {
                pair: exact_pair(g),
                optimal: true,
            })
        }
        PairMode::Heuristic => {
            g.require_at_most(64, "heuristic homogeneous pair search")?;
            Ok(PairSearch {
                pair: heuristic_pair(g),
                optimal: false,
            })
        }
    }
}

/// Neighborhood masks, complemented for the anticomplete kind so both kinds
/// reduce to finding `A` with a large common neighborhood.
fn kind_masks(g: &Graph, kind: PairKind) -> Vec<u64> {
    let n = g.n();
    let full = full_mask(n);
    (0..n)
        .map(|v| match kind {
            PairKind::Complete => g.mask(v),
            PairKind::Anticomplete => !g.mask(v) & full & !(1 << v),
        })
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Largest `t` such that some `A` with `|A| = t` has at least `t` common
/// neighbors. Depth-first over `A` in increasing vertex order; the common
/// neighborhood only shrinks, so a branch dies once it cannot beat `best`.
fn max_t(masks: &[u64], n: usize) -> usize {
    fn extend(masks: &[u64], n: usize, start: usize, size: usize, common: u64, best: &mut usize) {
        let t = size.min(common.count_ones() as usize);
        if t > *best {
            *best = t;
        }
        for v in start..n {
            let next = common & masks[v];
            // both |A| and |CN(A)| must be able to exceed best
            if (next.count_ones() as usize) <= *best || size + 1 + (n - v - 1) <= *best {
                continue;
            }
            extend(masks, n, v + 1, size + 1, next, best);
        }
    }
    let mut best = 0;
    extend(masks, n, 0, 0, full_mask(n), &mut best);
    best
}

/// Least `(A, B)` with `|A| = |B| = t`, `B` inside the common neighborhood
/// of `A`, and `min A < min B`.
fn least_pair_of_size(masks: &[u64], n: usize, t: usize) -> Option<(u64, u64)> {
    fn search(
        masks: &[u64],
        n: usize,
        t: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        common: u64,
    ) -> Option<(u64, u64)> {
        if chosen.len() == t {
            let first = chosen[0];
            let above = common & !full_mask(first + 1);
            if (above.count_ones() as usize) < t {
                return None;
            }
            let b = mask_bits(above).take(t).fold(0u64, |m, v| m | 1 << v);
            let a = chosen.iter().fold(0u64, |m, &v| m | 1 << v);
            return Some((a, b));
        }
        for v in start..n {
            let next = common & masks[v];
            if (next.count_ones() as usize) < t {
                continue;
            }
            chosen.push(v);
            let hit = search(masks, n, t, v + 1, chosen, next);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
    search(masks, n, t, 0, &mut Vec::with_capacity(t), full_mask(n))
}

fn exact_pair(g: &Graph) -> HomogeneousPair {
    let n = g.n();
    let anti = kind_masks(g, PairKind::Anticomplete);
    let comp = kind_masks(g, PairKind::Complete);
    let t_anti = max_t(&anti, n);
    let t_comp = max_t(&comp, n);
    let t = t_anti.max(t_comp);
    if t == 0 {
        return HomogeneousPair::unchecked(
            VertexSet::default(),
            VertexSet::default(),
            PairKind::Anticomplete,
        );
    }
    let (kind, masks) = if t_anti == t {
        (PairKind::Anticomplete, &anti)
    } else {
        (PairKind::Complete, &comp)
    };
    let (a, b) = least_pair_of_size(masks, n, t).expect("an optimal pair of size t exists");
    HomogeneousPair::unchecked(VertexSet::from_mask(a), VertexSet::from_mask(b), kind)
}

/// Greedy growth of `A` from a seed vertex, keeping `B = CN(A)` (common
/// neighborhood under the kind's masks) and recording the best balanced
/// size seen along the way.
fn greedy_from(masks: &[u64], n: usize, seed: usize) -> (usize, u64, u64) {
    let mut a = 1u64 << seed;
    let mut common = masks[seed];
    let mut best = (1.min(common.count_ones() as usize), a, common);
    loop {
        let size = a.count_ones() as usize + 1;
        let pick = (0..n)
            .filter(|&v| a >> v & 1 == 0)
            .map(|v| {
                let next = common & masks[v];
                (
                    size.min(next.count_ones() as usize),
                    next.count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .max();
        let Some((t, _, std::cmp::Reverse(v))) = pick else {
            break;
        };
        if t < best.0 || common & masks[v] == 0 {
            break;
        }
        a |= 1 << v;
        common &= masks[v];
        if t > best.0 {
            best = (t, a, common);
        }
    }
    best
}

fn balanced(a: u64, b: u64, t: usize, kind: PairKind) -> HomogeneousPair {
    let take = |m: u64| mask_bits(m).take(t).collect::<VertexSet>();
    HomogeneousPair::unchecked(take(a), take(b), kind)
}

/// Seeds are every vertex (its neighborhood or non-neighborhood becomes the
/// first `B`) plus the twin blocks across the closed neighborhoods of the
/// highest-degree vertices.
fn heuristic_pair(g: &Graph) -> HomogeneousPair {
    let n = g.n();
    let mut best = HomogeneousPair::unchecked(
        VertexSet::default(),
        VertexSet::default(),
        PairKind::Anticomplete,
    );
    let mut offer = |cand: HomogeneousPair| {
        if cand.t() > best.t() || (cand.t() == best.t() && cand < best) {
            best = cand;
        }
    };
    for kind in [PairKind::Anticomplete, PairKind::Complete] {
        let masks = kind_masks(g, kind);
        for seed in 0..n {
            let (t, a, b) = greedy_from(&masks, n, seed);
            if t > 0 {
                offer(balanced(a, b, t, kind));
            }
        }
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &v in by_degree.iter().take(4) {
        let closed: VertexSet = g.neighbors(v).chain([v]).collect();
        if let Ok(profile) = cross_twin_blocks(g, &closed) {
            for pair in profile.block_pairs() {
                let t = pair.t();
                let kind = pair.kind();
                offer(balanced(pair.a().mask(), pair.b().mask(), t, kind));
            }
        }
    }
    best
}

fn max_clique_size(masks: &[u64], n: usize) -> usize {
    fn expand(masks: &[u64], size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(masks, size + 1, cand & masks[v], best);
        }
    }
    let mut best = 0;
    expand(masks, 0, full_mask(n), &mut best);
    best
}

/// Maximum clique size.
pub fn omega(g: &Graph) -> Result<usize> {
    g.require_at_most(CLIQUE_LIMIT, "omega")?;
    let masks: Vec<u64> = (0..g.n()).map(|v| g.mask(v)).collect();
    Ok(max_clique_size(&masks, g.n()))
}

/// Maximum independent set size.
pub fn alpha(g: &Graph) -> Result<usize> {
    g.require_at_most(CLIQUE_LIMIT, "alpha")?;
    Ok(max_clique_size(
        &kind_masks(g, PairKind::Anticomplete),
        g.n(),
    ))
}
