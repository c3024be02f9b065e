//! Vertex-minor containment with replayable witnesses.
//!
//! `H` is a vertex-minor of `G` when `H` is isomorphic to an induced
//! subgraph of `G * v1 * ... * vk`. Two independent searches decide this:
//!
//! * [`Strategy::Orbit`] walks the labeled LC orbit of `G` breadth-first
//!   and looks for an induced copy of `H` in every member.
//! * [`Strategy::Interleaved`] runs a depth-first search over states
//!   reachable by local complementations and deletions, memoized on the
//!   exact adjacency together with the surviving vertex set.
//!
//! Local complementation at `v` commutes with deleting any other vertex,
//! so every interleaved path can be rewritten with all local
//! complementations first. Witnesses are emitted in that normal form.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::graph::{mask_bits, Graph};
use crate::iso::{find_induced_embedding, is_isomorphic};
use crate::lc::{lc_in_place, walk_orbit, LcTrace, ReplayError, Step, DEFAULT_ORBIT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Orbit,
    Interleaved,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "orbit" => Ok(Strategy::Orbit),
            "interleaved" => Ok(Strategy::Interleaved),
            other => Err(format!(
                "unknown strategy `{other}` (expected orbit or interleaved)"
            )),
        }
    }
}

/// A derivation of `H` from `G`: replay `trace` on `G`, then `embedding[h]`
/// is the surviving host vertex playing the role of `h`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Witness {
    pub trace: LcTrace,
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Containment {
    Present(Witness),
    Absent,
    /// The state budget ran out before a decision; `states` were explored.
    Undecided {
        states: usize,
    },
}

impl Containment {
    pub fn is_present(&self) -> bool {
        matches!(self, Containment::Present(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Containment::Absent)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Containment::Present(w) => Some(w),
            _ => None,
        }
    }
}

/// Decides whether `h` is a vertex-minor of `g` with the default state cap.
pub fn is_vertex_minor(h: &Graph, g: &Graph, strategy: Strategy) -> Result<Containment> {
    is_vertex_minor_capped(h, g, strategy, DEFAULT_ORBIT_CAP)
}

/// As [`is_vertex_minor`], exploring at most `cap` states.
pub fn is_vertex_minor_capped(
    h: &Graph,
    g: &Graph,
    strategy: Strategy,
    cap: usize,
) -> Result<Containment> {
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    if h.n() > g.n() {
        return Ok(Containment::Absent);
    }
    match strategy {
        Strategy::Orbit => Ok(orbit_search(h, g, cap)),
        Strategy::Interleaved => {
            g.require_at_most(64, "interleaved vertex-minor search")?;
            Ok(interleaved_search(h, g, cap))
        }
    }
}

fn orbit_search(h: &Graph, g: &Graph, cap: usize) -> Containment {
    let mut embedding = None;
    let walk = walk_orbit(g, cap, |state| {
        embedding = find_induced_embedding(h, state);
        embedding.is_some()
    });
    match (walk.hit, embedding) {
        (Some(i), Some(embedding)) => {
            let mut steps: Vec<Step> = walk.path_to(i).into_iter().map(Step::Lc).collect();
            let mut image = vec![false; g.n()];
            for &v in &embedding {
                image[v] = true;
            }
            steps.extend((0..g.n()).filter(|&v| !image[v]).map(Step::Delete));
            Containment::Present(Witness {
                trace: LcTrace::new(steps),
                embedding,
            })
        }
        _ if walk.truncated => Containment::Undecided {
            states: walk.states.len(),
        },
        _ => Containment::Absent,
    }
}

/// Host state on original labels: deleted vertices are isolated and cleared
/// from the survivor mask, so the pair is an exact memo key.
type State = (Graph, u64);

struct Frame {
    state: usize,
    moves: Vec<Step>,
    next: usize,
}

fn moves_for(graph: &Graph, alive: u64, target: usize) -> Vec<Step> {
    let mut moves = Vec::new();
    if alive.count_ones() as usize > target {
        let mut dels: Vec<(usize, usize)> =
            mask_bits(alive).map(|v| (graph.degree(v), v)).collect();
        dels.sort_unstable();
        moves.extend(dels.into_iter().map(|(_, v)| Step::Delete(v)));
    }
    moves.extend(
        mask_bits(alive)
            .filter(|&v| graph.degree(v) >= 2)
            .map(Step::Lc),
    );
    moves
}

fn match_state(h: &Graph, graph: &Graph, alive: u64) -> Option<Vec<usize>> {
    if alive.count_ones() as usize != h.n() {
        return None;
    }
    let labels: Vec<usize> = mask_bits(alive).collect();
    let sub = graph.induced_ordered(&labels);
    is_isomorphic(h, &sub).map(|map| map.into_iter().map(|i| labels[i]).collect())
}

fn interleaved_search(h: &Graph, g: &Graph, cap: usize) -> Containment {
    let target = h.n();
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut seen: IndexSet<State, FxBuildHasher> = IndexSet::default();
    let mut parent: Vec<Option<(usize, Step)>> = vec![None];
    seen.insert((g.clone(), full));

    let found = |idx: usize, embedding: Vec<usize>, parent: &[Option<(usize, Step)>]| {
        let mut path = Vec::new();
        let mut i = idx;
        while let Some((p, step)) = parent[i] {
            path.push(step);
            i = p;
        }
        path.reverse();
        // commute every deletion past the local complementations
        let (mut steps, dels): (Vec<Step>, Vec<Step>) =
            path.into_iter().partition(|s| matches!(s, Step::Lc(_)));
        steps.extend(dels);
        Containment::Present(Witness {
            trace: LcTrace::new(steps),
            embedding,
        })
    };

    if let Some(embedding) = match_state(h, g, full) {
        return found(0, embedding, &parent);
    }
    let mut stack = vec![Frame {
        state: 0,
        moves: moves_for(g, full, target),
        next: 0,
    }];
    while let Some(frame) = stack.last_mut() {
        let Some(&step) = frame.moves.get(frame.next) else {
            stack.pop();
            continue;
        };
        frame.next += 1;
        let from = frame.state;
        let (graph, alive) = &seen[from];
        let mut graph = graph.clone();
        let mut alive = *alive;
        match step {
            Step::Lc(v) => lc_in_place(&mut graph, v),
            Step::Delete(v) => {
                graph.isolate(v);
                alive &= !(1 << v);
            }
        }
        let key = (graph, alive);
        if seen.contains(&key) {
            continue;
        }
        if seen.len() >= cap {
            return Containment::Undecided { states: seen.len() };
        }
        let moves = moves_for(&key.0, alive, target);
        let embedding = match_state(h, &key.0, alive);
        let (idx, _) = seen.insert_full(key);
        parent.push(Some((from, step)));
        if let Some(embedding) = embedding {
            return found(idx, embedding, &parent);
        }
        stack.push(Frame {
            state: idx,
            moves,
            next: 0,
        });
    }
    Containment::Absent
}

/// Why a witness failed verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessDefect {
    Replay(ReplayError),
    EmbeddingSize { expected: usize, got: usize },
    EmbeddingOutOfRange { h: usize, g: usize },
    EmbeddingUsesDeleted { h: usize, g: usize },
    EmbeddingNotInjective { g: usize },
    Mismatch { x: usize, y: usize },
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessDefect::Replay(e) => write!(f, "malformed trace: {e}"),
            WitnessDefect::EmbeddingSize { expected, got } => {
                write!(
                    f,
                    "embedding has {got} entries, minor has {expected} vertices"
                )
            }
            WitnessDefect::EmbeddingOutOfRange { h, g } => {
                write!(f, "minor vertex {h} maps to {g}, outside the host")
            }
            WitnessDefect::EmbeddingUsesDeleted { h, g } => {
                write!(f, "minor vertex {h} maps to deleted host vertex {g}")
            }
            WitnessDefect::EmbeddingNotInjective { g } => {
                write!(f, "host vertex {g} is used twice")
            }
            WitnessDefect::Mismatch { x, y } => {
                write!(f, "adjacency of minor pair {{{x}, {y}}} is not preserved")
            }
        }
    }
}

/// Replays `w` on `g` and checks that the embedded image induces `h`.
pub fn check_witness(h: &Graph, g: &Graph, w: &Witness) -> std::result::Result<(), WitnessDefect> {
    let replayed = w.trace.replay(g).map_err(WitnessDefect::Replay)?;
    if w.embedding.len() != h.n() {
        return Err(WitnessDefect::EmbeddingSize {
            expected: h.n(),
            got: w.embedding.len(),
        });
    }
    let mut used = vec![false; g.n()];
    for (hv, &gv) in w.embedding.iter().enumerate() {
        if gv >= g.n() {
            return Err(WitnessDefect::EmbeddingOutOfRange { h: hv, g: gv });
        }
        if !replayed.alive[gv] {
            return Err(WitnessDefect::EmbeddingUsesDeleted { h: hv, g: gv });
        }
        if std::mem::replace(&mut used[gv], true) {
            return Err(WitnessDefect::EmbeddingNotInjective { g: gv });
        }
    }
    for x in 0..h.n() {
        for y in x + 1..h.n() {
            if h.has_edge(x, y) != replayed.graph.has_edge(w.embedding[x], w.embedding[y]) {
                return Err(WitnessDefect::Mismatch { x, y });
            }
        }
    }
    Ok(())
}

pub fn verify_witness(h: &Graph, g: &Graph, w: &Witness) -> bool {
    check_witness(h, g, w).is_ok()
}

impl fmt::Display for Witness {
    /// One step per line (`lc v` or `del v`), then `embed h0->g0 h1->g1 ...`,
    /// each line terminated by a newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.trace.steps {
            writeln!(f, "{step}")?;
        }
        write!(f, "embed")?;
        for (h, g) in self.embedding.iter().enumerate() {
            write!(f, " {h}->{g}")?;
        }
        writeln!(f)
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    let canonical = !token.is_empty()
        && token.bytes().all(|b| b.is_ascii_digit())
        && (token == "0" || !token.starts_with('0'));
    if !canonical {
        return Err(Error::WitnessFormat {
            line,
            msg: format!("`{token}` is not a vertex index"),
        });
    }
    token.parse().map_err(|_| Error::WitnessFormat {
        line,
        msg: format!("`{token}` is too large"),
    })
}

impl FromStr for Witness {
    type Err = Error;

    /// Strict inverse of the `Display` form.
    fn from_str(text: &str) -> Result<Witness> {
        let body = text
            .strip_suffix('\n')
            .ok_or_else(|| Error::WitnessFormat {
                line: text.lines().count().max(1),
                msg: "missing final newline".into(),
            })?;
        let lines: Vec<&str> = body.split('\n').collect();
        let (embed_line, step_lines) = lines.split_last().expect("split yields at least one item");
        let mut steps = Vec::with_capacity(step_lines.len());
        for (i, line) in step_lines.iter().enumerate() {
            let step = match line.split_once(' ') {
                Some(("lc", v)) => Step::Lc(parse_index(v, i + 1)?),
                Some(("del", v)) => Step::Delete(parse_index(v, i + 1)?),
                _ => {
                    return Err(Error::WitnessFormat {
                        line: i + 1,
                        msg: format!("expected `lc V` or `del V`, found `{line}`"),
                    })
                }
            };
            steps.push(step);
        }
        let line_no = lines.len();
        let rest = embed_line
            .strip_prefix("embed")
            .ok_or_else(|| Error::WitnessFormat {
                line: line_no,
                msg: "expected the `embed` line".into(),
            })?;
        let mut embedding = Vec::new();
        if !rest.is_empty() {
            let pairs = rest.strip_prefix(' ').ok_or_else(|| Error::WitnessFormat {
                line: line_no,
                msg: "malformed `embed` line".into(),
            })?;
            for (expected, pair) in pairs.split(' ').enumerate() {
                let (h, g) = pair.split_once("->").ok_or_else(|| Error::WitnessFormat {
                    line: line_no,
                    msg: format!("expected `h->g`, found `{pair}`"),
                })?;
                if parse_index(h, line_no)? != expected {
                    return Err(Error::WitnessFormat {
                        line: line_no,
                        msg: format!("embedding entries must be listed as 0, 1, 2, ...; found {h} at position {expected}"),
                    });
                }
                embedding.push(parse_index(g, line_no)?);
            }
        }
        Ok(Witness {
            trace: LcTrace::new(steps),
            embedding,
        })
    }
}
