//! Exact isomorphism and induced-subgraph matching by backtracking.
//!
//! Both searches assign pattern vertices in increasing order and try target
//! vertices in increasing order, so the first mapping found is the
//! lexicographically least one.

use crate::graph::Graph;

/// Degree plus the sorted multiset of neighbor degrees.
fn refined_degrees(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

/// Returns the lexicographically least isomorphism `V(g) -> V(h)`, if any.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let cg = refined_degrees(g);
    let ch = refined_degrees(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| ch[u] == cg[v]).collect())
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(g, h, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_iso(
    g: &Graph,
    h: &Graph,
    candidates: &[Vec<usize>],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.n() {
        return true;
    }
    for &u in &candidates[v] {
        if used[u] || (0..v).any(|w| g.has_edge(v, w) != h.has_edge(u, map[w])) {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if extend_iso(g, h, candidates, v + 1, map, used) {
            return true;
        }
        used[u] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Finds the lexicographically least injective map `phi: V(pattern) ->
/// V(host)` such that `pattern` is isomorphic, via `phi`, to the subgraph of
/// `host` induced on the image of `phi`.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let (k, n) = (pattern.n(), host.n());
    if k > n {
        return None;
    }
    let pd = pattern.degrees();
    let hd = host.degrees();
    // a pattern vertex needs at least as many neighbors and non-neighbors
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|p| {
            (0..n)
                .filter(|&u| hd[u] >= pd[p] && n - 1 - hd[u] >= k - 1 - pd[p])
                .collect()
        })
        .collect();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; n];
    if extend_iso(pattern, host, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// True when `map` is a bijection `V(g) -> V(h)` preserving edges and
/// non-edges.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.n();
    if n != h.n() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &u in map {
        if u >= n || std::mem::replace(&mut seen[u], true) {
            return false;
        }
    }
    (0..n).all(|x| (x + 1..n).all(|y| g.has_edge(x, y) == h.has_edge(map[x], map[y])))
}
