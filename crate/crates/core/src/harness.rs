//! Batch experiments: forbidden vertex-minor filtering, the empirical
//! epsilon scan, and the degree dichotomy used to split a host into a
//! sparse case and a dense neighborhood case.

use std::fmt::{self, Write as _};
use std::io::{self, BufRead, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{write_graph6, Graph6Reader};
use crate::lc::DEFAULT_ORBIT_CAP;
use crate::pairs::{alpha, max_balanced_homogeneous_pair, omega, PairMode};
use crate::vertex_minor::{is_vertex_minor_capped, Containment, Strategy};

/// How containment is decided inside batch runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            strategy: Strategy::Orbit,
            cap: DEFAULT_ORBIT_CAP,
        }
    }
}

/// Counts from one filtering pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FilterSummary {
    pub read: usize,
    pub passed: usize,
    pub rejected: usize,
    pub undecided: usize,
    pub malformed: usize,
}

enum Verdict {
    Pass(Graph),
    Reject,
    Undecided(Graph, usize),
    Malformed(Error),
    Failed(Error),
}

/// Copies to `out` exactly the graphs of `input` that do not contain `h` as
/// a vertex-minor. Undecided graphs and unparseable lines are reported on
/// `diagnostics` with their line numbers; neither is ever written to `out`.
pub fn filter_h_free<R: BufRead, W: Write + ?Sized, D: Write + ?Sized>(
    input: R,
    h: &Graph,
    config: SearchConfig,
    out: &mut W,
    diagnostics: &mut D,
) -> io::Result<FilterSummary> {
    let items = Graph6Reader::new(input).collect::<io::Result<Vec<_>>>()?;
    let verdicts: Vec<(usize, Verdict)> = items
        .into_par_iter()
        .map(|item| {
            let verdict = match item.graph {
                Err(e) => Verdict::Malformed(e),
                Ok(g) => match is_vertex_minor_capped(h, &g, config.strategy, config.cap) {
                    Ok(Containment::Absent) => Verdict::Pass(g),
                    Ok(Containment::Present(_)) => Verdict::Reject,
                    Ok(Containment::Undecided { states }) => Verdict::Undecided(g, states),
                    Err(e) => Verdict::Failed(e),
                },
            };
            (item.line, verdict)
        })
        .collect();

    let mut summary = FilterSummary::default();
    for (line, verdict) in verdicts {
        summary.read += 1;
        match verdict {
            Verdict::Pass(g) => {
                summary.passed += 1;
                writeln!(out, "{}", write_graph6(&g).map_err(io::Error::other)?)?;
            }
            Verdict::Reject => summary.rejected += 1,
            Verdict::Undecided(g, states) => {
                summary.undecided += 1;
                writeln!(
                    diagnostics,
                    "line {line}: undecided (truncated after {states} states): {}",
                    write_graph6(&g).map_err(io::Error::other)?
                )?;
            }
            Verdict::Malformed(e) => {
                summary.malformed += 1;
                writeln!(diagnostics, "line {line}: {e}")?;
            }
            Verdict::Failed(e) => {
                summary.undecided += 1;
                writeln!(diagnostics, "line {line}: {e}")?;
            }
        }
    }
    Ok(summary)
}

/// Statistics for one order `n` of an epsilon scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    /// Graphs of order `n` decided to be free of the minor.
    pub family_size: usize,
    /// Least balanced homogeneous pair size over the family.
    pub min_t: Option<usize>,
    /// First family member (in input order) attaining `min_t`.
    pub extremal: Option<Graph>,
    /// Least `max(alpha, omega)` over the family.
    pub min_max_alpha_omega: Option<usize>,
    /// Graphs whose containment could not be decided.
    pub truncated_count: usize,
}

impl ScanRow {
    fn empty(n: usize) -> Self {
        ScanRow {
            n,
            family_size: 0,
            min_t: None,
            extremal: None,
            min_max_alpha_omega: None,
            truncated_count: 0,
        }
    }

    pub fn is_vacuous(&self) -> bool {
        self.family_size == 0
    }

    /// `min_t / n`, exact.
    pub fn min_ratio(&self) -> Option<Ratio<usize>> {
        match self.min_t {
            Some(t) if self.n > 0 => Some(Ratio::new(t, self.n)),
            _ => None,
        }
    }

    /// `log(min max(alpha, omega)) / log(n)` for `n >= 2`.
    pub fn implied_exponent(&self) -> Option<f64> {
        match self.min_max_alpha_omega {
            Some(m) if self.n >= 2 => Some((m as f64).ln() / (self.n as f64).ln()),
            _ => None,
        }
    }
}

/// Per-order envelope of the balanced homogeneous pair size and of
/// `max(alpha, omega)` over graphs without a given vertex-minor.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonReport {
    pub minor: Graph,
    pub rows: Vec<ScanRow>,
}

pub const CSV_HEADER: &str =
    "n,family_size,min_t,min_ratio,min_maxalphaomega,implied_exponent,truncated_count";

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

fn ratio_decimal(r: Ratio<usize>) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

impl EpsilonReport {
    /// The least `min_ratio` across all orders, with the first order
    /// attaining it.
    pub fn overall_min_ratio(&self) -> Option<(Ratio<usize>, &ScanRow)> {
        self.rows
            .iter()
            .filter_map(|r| r.min_ratio().map(|q| (q, r)))
            .fold(None, |best, (q, r)| match best {
                Some((b, _)) if b <= q => best,
                _ => Some((q, r)),
            })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{CSV_HEADER}").unwrap();
        for r in &self.rows {
            writeln!(
                s,
                "{},{},{},{},{},{},{}",
                r.n,
                r.family_size,
                opt(r.min_t),
                opt(r.min_ratio().map(ratio_decimal)),
                opt(r.min_max_alpha_omega),
                opt(r.implied_exponent().map(|e| format!("{e:.6}"))),
                r.truncated_count
            )
            .unwrap();
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g6 = write_graph6(&self.minor).unwrap_or_default();
        writeln!(s, "epsilon scan").unwrap();
        writeln!(
            s,
            "forbidden vertex-minor: {g6} ({} vertices, {} edges)",
            self.minor.n(),
            self.minor.edge_count()
        )
        .unwrap();
        writeln!(
            s,
            "asymptotic bound (symbolic only): epsilon = min(2*c*delta, delta), c and delta existential"
        )
        .unwrap();
        for r in &self.rows {
            if r.is_vacuous() {
                writeln!(
                    s,
                    "n={}: vacuous (no minor-free graphs), truncated {}",
                    r.n, r.truncated_count
                )
                .unwrap();
                continue;
            }
            let ratio = r.min_ratio().expect("non-vacuous row");
            writeln!(
                s,
                "n={}: family {}, min_t {}, min_ratio {} ({}), min max(alpha,omega) {}, implied exponent {}, truncated {}, extremal {}",
                r.n,
                r.family_size,
                opt(r.min_t),
                ratio,
                ratio_decimal(ratio),
                opt(r.min_max_alpha_omega),
                opt(r.implied_exponent().map(|e| format!("{e:.6}"))),
                r.truncated_count,
                r.extremal.as_ref().and_then(|g| write_graph6(g).ok()).unwrap_or_default(),
            )
            .unwrap();
        }
        match self.overall_min_ratio() {
            Some((q, r)) => writeln!(
                s,
                "overall min_ratio {} ({}) at n={} with t={}",
                q,
                ratio_decimal(q),
                r.n,
                opt(r.min_t)
            )
            .unwrap(),
            None => writeln!(s, "overall: vacuous").unwrap(),
        }
        s
    }
}

struct Measured {
    n: usize,
    outcome: Outcome,
}

enum Outcome {
    Member {
        t: usize,
        max_alpha_omega: usize,
        graph: Graph,
    },
    Excluded,
    Truncated,
}

/// Scans `graphs` (orders outside `orders` are ignored) and reports, per
/// order, statistics over the graphs without `h` as a vertex-minor. Orders
/// in range with no such graphs appear as vacuous rows.
pub fn epsilon_scan(
    graphs: impl IntoIterator<Item = Graph>,
    h: &Graph,
    orders: RangeInclusive<usize>,
    config: SearchConfig,
) -> Result<EpsilonReport> {
    let inputs: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| orders.contains(&g.n()))
        .collect();
    let measured: Vec<Measured> = inputs
        .into_par_iter()
        .map(|g| -> Result<Measured> {
            let outcome = match is_vertex_minor_capped(h, &g, config.strategy, config.cap)? {
                Containment::Present(_) => Outcome::Excluded,
                Containment::Undecided { .. } => Outcome::Truncated,
                Containment::Absent => {
                    let t = max_balanced_homogeneous_pair(&g, PairMode::Exact)?.pair.t();
                    let max_alpha_omega = alpha(&g)?.max(omega(&g)?);
                    Outcome::Member {
                        t,
                        max_alpha_omega,
                        graph: g.clone(),
                    }
                }
            };
            Ok(Measured { n: g.n(), outcome })
        })
        .collect::<Result<_>>()?;

    let mut rows: Vec<ScanRow> = orders.clone().map(ScanRow::empty).collect();
    let first = *orders.start();
    for m in measured {
        let row = &mut rows[m.n - first];
        match m.outcome {
            Outcome::Excluded => {}
            Outcome::Truncated => row.truncated_count += 1,
            Outcome::Member {
                t,
                max_alpha_omega,
                graph,
            } => {
                row.family_size += 1;
                if row.min_t.is_none_or(|cur| t < cur) {
                    row.min_t = Some(t);
                    row.extremal = Some(graph);
                }
                row.min_max_alpha_omega = Some(
                    row.min_max_alpha_omega
                        .map_or(max_alpha_omega, |cur| cur.min(max_alpha_omega)),
                );
            }
        }
    }
    Ok(EpsilonReport {
        minor: h.clone(),
        rows,
    })
}

/// A rational threshold strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Delta(Ratio<u64>);

impl Delta {
    pub fn new(r: Ratio<u64>) -> Result<Delta> {
        if *r.numer() == 0 || r >= Ratio::from_integer(1) {
            return Err(Error::DeltaOutOfRange(r.to_string()));
        }
        Ok(Delta(r))
    }

    pub fn ratio(self) -> Ratio<u64> {
        self.0
    }
}

impl FromStr for Delta {
    type Err = Error;

    /// Accepts `p/q` or a decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Delta> {
        let bad = || Error::DeltaOutOfRange(s.to_string());
        let r = if let Some((p, q)) = s.split_once('/') {
            let (p, q): (u64, u64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
            if q == 0 {
                return Err(bad());
            }
            Ratio::new(p, q)
        } else {
            let (int, frac) = s.split_once('.').unwrap_or((s, ""));
            let valid = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
            if int.is_empty() && frac.is_empty() || !valid(int) || !valid(frac) || frac.len() > 18 {
                return Err(bad());
            }
            let int: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let scale = 10u64.pow(frac.len() as u32);
            let frac: u64 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            Ratio::new(int.checked_mul(scale).ok_or_else(bad)? + frac, scale)
        };
        Delta::new(r)
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Outcome of splitting a host by maximum degree against `2 * delta * n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DichotomyFinding {
    /// Every degree is at most `2 delta n`, hence `|E| <= delta n^2`.
    Sparse {
        edge_count: usize,
        max_degree: usize,
        /// `delta * n^2`.
        edge_bound: Ratio<u64>,
    },
    /// `vertex` is the least vertex of degree above `2 delta n`.
    Dense {
        vertex: usize,
        degree: usize,
        /// Subgraph induced on the neighbors of `vertex`, relabeled densely.
        neighborhood: Graph,
        /// Original labels of the neighborhood graph's vertices.
        labels: Vec<usize>,
        neighborhood_complement: Graph,
    },
}

pub fn degree_dichotomy(g: &Graph, delta: Delta) -> DichotomyFinding {
    let n = g.n() as u64;
    let (p, q) = (*delta.0.numer(), *delta.0.denom());
    // deg > 2 delta n  <=>  deg * q > 2 p n
    let heavy = |d: usize| d as u64 * q > 2 * p * n;
    match (0..g.n()).find(|&v| heavy(g.degree(v))) {
        Some(v) => {
            let nbrs: VertexSet = g.neighbors(v).collect();
            let (neighborhood, labels) = g.induced_subgraph(&nbrs).expect("neighbors are in range");
            DichotomyFinding::Dense {
                vertex: v,
                degree: labels.len(),
                neighborhood_complement: neighborhood.complement(),
                neighborhood,
                labels,
            }
        }
        None => {
            let edge_count = g.edge_count();
            let edge_bound = Ratio::new(p * n * n, q);
            // handshake: 2|E| = sum of degrees <= n * 2 delta n
            assert!(
                Ratio::from_integer(edge_count as u64) <= edge_bound,
                "edge bound violated for a sparse host"
            );
            DichotomyFinding::Sparse {
                edge_count,
                max_degree: g.max_degree(),
                edge_bound,
            }
        }
    }
}
