use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Iterates the set bit positions of a word-packed bitset.
pub(crate) fn bit_positions(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * WORD_BITS + bit)
        })
    })
}

/// Iterates the set bit positions of a single word.
pub(crate) fn mask_bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            return None;
        }
        let bit = w.trailing_zeros() as usize;
        w &= w - 1;
        Some(bit)
    })
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one word-packed bit row per vertex. The value is
/// immutable through the public API; every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and duplicate edges (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for (x, y) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if x == y {
                return Err(Error::Loop(x));
            }
            if g.has_edge(x, y) {
                return Err(Error::DuplicateEdge(x.min(y), x.max(y)));
            }
            g.set_edge(x, y, true);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(n - 1, 0, true);
        g
    }

    /// `k` disjoint edges `{0,1}, {2,3}, ...`.
    pub fn matching(k: usize) -> Graph {
        let mut g = Graph::empty(2 * k);
        for i in 0..k {
            g.set_edge(2 * i, 2 * i + 1, true);
        }
        g
    }

    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for y in 1..n {
            for x in 0..y {
                if adjacent(x, y) {
                    g.set_edge(x, y, true);
                }
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.n && y < self.n);
        self.rows[x * self.stride + y / WORD_BITS] >> (y % WORD_BITS) & 1 == 1
    }

    /// The neighborhood of `v` as a packed bit row.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// The neighborhood of `v` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD_BITS);
        self.rows[v * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bit_positions(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for x in 0..self.n {
            out.extend(self.neighbors(x).filter(|&y| y > x).map(|y| (x, y)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            let row = &mut g.rows[v * self.stride..(v + 1) * self.stride];
            for w in row.iter_mut() {
                *w = !*w;
            }
            // clear the diagonal and the tail past n
            row[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
            if !self.n.is_multiple_of(WORD_BITS) {
                row[self.stride - 1] &= (1u64 << (self.n % WORD_BITS)) - 1;
            }
        }
        g
    }

    /// The subgraph induced on `set`, relabeled to `0..|set|` in increasing
    /// order. The returned vector maps each new label to its original vertex.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        set.check_range(self.n)?;
        let labels = set.as_slice().to_vec();
        let g = Graph::from_fn(labels.len(), |i, j| self.has_edge(labels[i], labels[j]));
        Ok((g, labels))
    }

    /// Induced subgraph on the given vertices in the given order. Callers
    /// guarantee the vertices are distinct and in range.
    pub(crate) fn induced_ordered(&self, order: &[usize]) -> Graph {
        Graph::from_fn(order.len(), |i, j| self.has_edge(order[i], order[j]))
    }

    /// Graph with `v` removed and the remaining vertices relabeled densely.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_ordered(&keep))
    }

    /// Replaces each edge of `self` by a path. `counts[i]` is the number of
    /// fresh internal vertices placed on the `i`-th edge of [`Graph::edges`].
    /// Fresh vertices are numbered from `n` upward, edge by edge, in path
    /// order from the smaller endpoint.
    pub fn subdivide(&self, counts: &[usize]) -> Result<Graph> {
        let edges = self.edges();
        if counts.len() != edges.len() {
            return Err(Error::SubdivisionCounts {
                expected: edges.len(),
                got: counts.len(),
            });
        }
        let total = self.n + counts.iter().sum::<usize>();
        let mut g = Graph::empty(total);
        let mut next = self.n;
        for (&(x, y), &c) in edges.iter().zip(counts) {
            let mut prev = x;
            for _ in 0..c {
                g.set_edge(prev, next, true);
                prev = next;
                next += 1;
            }
            g.set_edge(prev, y, true);
        }
        Ok(g)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn require_at_most(&self, limit: usize, what: &'static str) -> Result<()> {
        if self.n <= limit {
            Ok(())
        } else {
            Err(Error::TooLarge {
                what,
                n: self.n,
                limit,
            })
        }
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, x: usize, y: usize, on: bool) {
        let (s, xw, yw) = (self.stride, x / WORD_BITS, y / WORD_BITS);
        let (xb, yb) = (1u64 << (x % WORD_BITS), 1u64 << (y % WORD_BITS));
        if on {
            self.rows[x * s + yw] |= yb;
            self.rows[y * s + xw] |= xb;
        } else {
            self.rows[x * s + yw] &= !yb;
            self.rows[y * s + xw] &= !xb;
        }
    }

    /// XORs `bits` into the row of `v` without touching the mirror entries.
    /// Callers restore symmetry themselves.
    #[inline]
    pub(crate) fn xor_row(&mut self, v: usize, bits: &[u64]) {
        let s = self.stride;
        for (w, b) in self.rows[v * s..(v + 1) * s].iter_mut().zip(bits) {
            *w ^= b;
        }
    }

    /// Flips the single entry `(x, y)` of the row of `x`.
    #[inline]
    pub(crate) fn flip_entry(&mut self, x: usize, y: usize) {
        self.rows[x * self.stride + y / WORD_BITS] ^= 1 << (y % WORD_BITS);
    }

    /// Removes every edge at `v`.
    pub(crate) fn isolate(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        for u in nbrs {
            self.set_edge(u, v, false);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list()
            .entries(self.edges().iter().map(|(x, y)| format!("{x}-{y}")))
            .finish()?;
        write!(f, ")")
    }
}

/// A set of vertex identifiers, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask_bits(mask).collect())
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    /// Bit mask of the members; all members must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| {
            debug_assert!(v < WORD_BITS);
            m | 1 << v
        })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `{0..n} \ self`.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// Packed bitset over `0..n`.
    pub(crate) fn to_words(&self, n: usize) -> Vec<u64> {
        let mut words = vec![0; words_for(n)];
        for &v in &self.0 {
            words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
        }
        words
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
