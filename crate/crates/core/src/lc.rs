//! Local complementation and derived operations.

use std::fmt;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::graph::{bit_positions, Graph, VertexSet};

/// Default bound on the number of labeled graphs an orbit walk may visit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

pub(crate) type GraphSet = IndexSet<Graph, FxBuildHasher>;

/// `G * v`: complements the subgraph induced on the neighborhood of `v`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut out = g.clone();
    lc_in_place(&mut out, v);
    Ok(out)
}

pub(crate) fn lc_in_place(g: &mut Graph, v: usize) {
    let nbrs = g.row(v).to_vec();
    for x in bit_positions(&nbrs) {
        g.xor_row(x, &nbrs);
        // x is in its own toggle mask; undo the diagonal flip
        g.flip_entry(x, x);
    }
}

/// Left-to-right fold of [`local_complement`].
pub fn apply_lc_sequence(g: &Graph, seq: &[usize]) -> Result<Graph> {
    for &v in seq {
        g.check_vertex(v)?;
    }
    let mut out = g.clone();
    for &v in seq {
        lc_in_place(&mut out, v);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Lc(usize),
    Delete(usize),
}

impl Step {
    pub fn vertex(self) -> usize {
        match self {
            Step::Lc(v) | Step::Delete(v) => v,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Lc(v) => write!(f, "lc {v}"),
            Step::Delete(v) => write!(f, "del {v}"),
        }
    }
}

/// A sequence of local complementations and deletions. Vertex identifiers
/// always refer to the original host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LcTrace {
    pub steps: Vec<Step>,
}

/// Why a trace could not be replayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayError {
    OutOfRange { step: usize, vertex: usize },
    AlreadyDeleted { step: usize, vertex: usize },
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::OutOfRange { step, vertex } => {
                write!(
                    f,
                    "step {step} refers to vertex {vertex}, which is out of range"
                )
            }
            ReplayError::AlreadyDeleted { step, vertex } => {
                write!(
                    f,
                    "step {step} refers to vertex {vertex}, which was already deleted"
                )
            }
        }
    }
}

/// State after replaying a trace, still on the host's vertex labels.
/// Deleted vertices are kept as isolated placeholders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replayed {
    pub graph: Graph,
    pub alive: Vec<bool>,
}

impl Replayed {
    pub fn survivors(&self) -> VertexSet {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
            .collect()
    }

    /// The surviving graph, densely relabeled.
    pub fn result(&self) -> Graph {
        let keep: Vec<usize> = self.survivors().iter().collect();
        self.graph.induced_ordered(&keep)
    }
}

impl LcTrace {
    pub fn new(steps: Vec<Step>) -> Self {
        LcTrace { steps }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn replay(&self, g: &Graph) -> std::result::Result<Replayed, ReplayError> {
        let mut graph = g.clone();
        let mut alive = vec![true; g.n()];
        for (i, &step) in self.steps.iter().enumerate() {
            let v = step.vertex();
            if v >= g.n() {
                return Err(ReplayError::OutOfRange { step: i, vertex: v });
            }
            if !alive[v] {
                return Err(ReplayError::AlreadyDeleted { step: i, vertex: v });
            }
            match step {
                Step::Lc(v) => lc_in_place(&mut graph, v),
                Step::Delete(v) => {
                    graph.isolate(v);
                    alive[v] = false;
                }
            }
        }
        Ok(Replayed { graph, alive })
    }
}

/// The labeled graphs reachable by local complementations, in breadth-first
/// discovery order.
#[derive(Debug, Clone)]
pub struct LcOrbit {
    pub graphs: Vec<Graph>,
    pub truncated: bool,
}

impl LcOrbit {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Breadth-first walk over the LC orbit. `parent[i]` records the state and
/// vertex from which state `i` was first reached.
pub(crate) struct OrbitWalk {
    pub states: GraphSet,
    pub parent: Vec<Option<(usize, usize)>>,
    pub truncated: bool,
    pub hit: Option<usize>,
}

impl OrbitWalk {
    /// LC vertices leading from the start to state `i`.
    pub fn path_to(&self, mut i: usize) -> Vec<usize> {
        let mut seq = Vec::new();
        while let Some((p, v)) = self.parent[i] {
            seq.push(v);
            i = p;
        }
        seq.reverse();
        seq
    }
}

/// Walks the orbit of `g`, stopping early at the first state for which
/// `stop` returns true. Visits at most `cap` states.
pub(crate) fn walk_orbit(g: &Graph, cap: usize, mut stop: impl FnMut(&Graph) -> bool) -> OrbitWalk {
    let mut states = GraphSet::default();
    let mut parent = vec![None];
    states.insert(g.clone());
    let mut walk_hit = stop(g).then_some(0);
    let mut truncated = false;
    let mut head = 0;
    'bfs: while walk_hit.is_none() && head < states.len() {
        let current = states[head].clone();
        for v in 0..current.n() {
            // LC at a vertex of degree at most one changes nothing
            if current.degree(v) < 2 {
                continue;
            }
            let mut next = current.clone();
            lc_in_place(&mut next, v);
            if states.contains(&next) {
                continue;
            }
            if states.len() >= cap {
                truncated = true;
                break 'bfs;
            }
            let found = stop(&next);
            states.insert(next);
            parent.push(Some((head, v)));
            if found {
                walk_hit = Some(states.len() - 1);
                break 'bfs;
            }
        }
        head += 1;
    }
    OrbitWalk {
        states,
        parent,
        truncated,
        hit: walk_hit,
    }
}

/// Closure of `{g}` under local complementation, deduplicated on exact
/// labeled adjacency. Stops with `truncated` set once more than `cap`
/// graphs would be needed.
pub fn lc_orbit(g: &Graph, cap: usize) -> Result<LcOrbit> {
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    let walk = walk_orbit(g, cap, |_| false);
    Ok(LcOrbit {
        graphs: walk.states.into_iter().collect(),
        truncated: walk.truncated,
    })
}

fn check_smoothable(g: &Graph, v: usize) -> Result<()> {
    let degree = g.degree(v);
    if degree != 2 {
        return Err(Error::NotDegreeTwo { vertex: v, degree });
    }
    let mut nbrs = g.neighbors(v);
    let (a, b) = (nbrs.next().unwrap(), nbrs.next().unwrap());
    if g.has_edge(a, b) {
        return Err(Error::NeighborsAdjacent { vertex: v, a, b });
    }
    Ok(())
}

/// Local complementation at a degree-2 vertex with non-adjacent neighbors,
/// followed by deleting it. The result is densely relabeled.
pub fn smooth_step(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    check_smoothable(g, v)?;
    local_complement(g, v)?.delete_vertex(v)
}

/// Smooths the least applicable vertex until none remains. Returns the
/// densely relabeled result and the trace on the original labels.
pub fn smooth_maximally(g: &Graph) -> (Graph, LcTrace) {
    let mut state = g.clone();
    let mut alive = vec![true; g.n()];
    let mut steps = Vec::new();
    // deleted vertices are isolated, so they never qualify
    while let Some(v) = (0..g.n()).find(|&v| alive[v] && check_smoothable(&state, v).is_ok()) {
        lc_in_place(&mut state, v);
        state.isolate(v);
        alive[v] = false;
        steps.push(Step::Lc(v));
        steps.push(Step::Delete(v));
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    (state.induced_ordered(&keep), LcTrace::new(steps))
}
