use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use vminor::cut_rank::cross_twin_blocks;
use vminor::enumerate::{enumerate_graphs, ENUMERATION_LIMIT};
use vminor::graph6::{write_graph6, write_graph6_line, Graph6Reader};
use vminor::harness::{
    degree_dichotomy, epsilon_scan, filter_h_free, Delta, DichotomyFinding, SearchConfig,
};
use vminor::lc::{lc_orbit, local_complement, DEFAULT_ORBIT_CAP};
use vminor::pairs::{max_balanced_homogeneous_pair, PairMode};
use vminor::vertex_minor::{is_vertex_minor_capped, Containment, Strategy};
use vminor::{Graph, VertexSet};

/// Experiments with vertex-minors, local complementation and homogeneous
/// pairs. Graphs are read and written as graph6, one per line.
#[derive(Parser)]
#[command(name = "vminor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between edge lists ("n x-y x-y ...") and graph6.
    G6 {
        #[command(subcommand)]
        direction: G6Direction,
    },
    /// Local complementation at a vertex, for each input graph.
    Lc {
        #[arg(long)]
        at: usize,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Labeled LC orbit of a single graph, one member per line.
    Orbit {
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Decide whether the minor is a vertex-minor of the host and print a witness.
    Vm {
        #[arg(long)]
        minor: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Cut-rank of a vertex set with its twin blocks, for each input graph.
    Cutrank {
        /// Comma-separated vertices, e.g. 0,2,5 (may be empty).
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Largest balanced homogeneous pair, for each input graph.
    Pair {
        #[arg(long, default_value = "exact")]
        mode: PairMode,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Split each input graph by maximum degree against 2*delta*n.
    Dichotomy {
        /// Rational in (0,1), as p/q or a decimal.
        #[arg(long)]
        delta: Delta,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Keep the input graphs that do not contain the minor.
    Filter {
        #[arg(long)]
        minor: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Empirical homogeneous-pair envelope over minor-free graphs.
    Scan {
        #[arg(long)]
        minor: PathBuf,
        /// Orders to scan, as A..B or a single N.
        #[arg(long, value_parser = parse_orders)]
        n: RangeInclusive<usize>,
        /// graph6 stream to scan; without it every graph on the given orders
        /// is generated (orders up to 8 only).
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// One graph per isomorphism class on n vertices (n <= 8).
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum G6Direction {
    /// Edge lists to graph6.
    Encode {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// graph6 to edge lists.
    Decode {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, default_value = "orbit")]
    strategy: Strategy,
    /// Maximum number of search states before giving up as undecided.
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
    cap: usize,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig> {
        if self.cap == 0 {
            bail!("--cap must be positive");
        }
        Ok(SearchConfig {
            strategy: self.strategy,
            cap: self.cap,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Text,
}

/// Exit status of a command that ran to completion.
#[derive(Debug, PartialEq, Eq)]
enum Status {
    Decided,
    Undecided,
}

fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad order `{t}`"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

fn open(path: Option<&Path>) -> Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(
            File::open(p).with_context(|| format!("cannot open {}", p.display()))?,
        )),
        None => Box::new(io::stdin().lock()),
    })
}

/// All graphs of a graph6 stream; any malformed line is an error.
fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>> {
    let name = path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    Graph6Reader::new(open(path)?)
        .map(|item| {
            let item = item.with_context(|| format!("reading {name}"))?;
            item.graph
                .with_context(|| format!("{name}, line {}", item.line))
        })
        .collect()
}

fn read_one(path: Option<&Path>) -> Result<Graph> {
    let mut graphs = read_graphs(path)?;
    let name = path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        k => bail!("{name}: expected exactly one graph, found {k}"),
    }
}

fn parse_edge_list(line: &str) -> Result<Graph> {
    let mut parts = line.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| anyhow!("empty edge list"))?
        .parse()
        .context("vertex count")?;
    let edges = parts
        .map(|e| {
            let (x, y) = e.split_once('-').ok_or_else(|| anyhow!("bad edge `{e}`"))?;
            Ok((
                x.parse().with_context(|| format!("bad edge `{e}`"))?,
                y.parse().with_context(|| format!("bad edge `{e}`"))?,
            ))
        })
        .collect::<Result<Vec<(usize, usize)>>>()?;
    Ok(Graph::new(n, edges)?)
}

fn edge_list(g: &Graph) -> String {
    let mut s = g.n().to_string();
    for (x, y) in g.edges() {
        s.push_str(&format!(" {x}-{y}"));
    }
    s
}

fn parse_set(s: &str) -> Result<VertexSet> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad vertex `{t}` in --set"))
        })
        .collect()
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Status> {
    match cli.command {
        Command::G6 { direction } => match direction {
            G6Direction::Encode { input } => {
                for (i, line) in open(input.as_deref())?.lines().enumerate() {
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    let g = parse_edge_list(&line).with_context(|| format!("line {}", i + 1))?;
                    writeln!(out, "{}", write_graph6(&g)?)?;
                }
            }
            G6Direction::Decode { input } => {
                for g in read_graphs(input.as_deref())? {
                    writeln!(out, "{}", edge_list(&g))?;
                }
            }
        },
        Command::Lc { at, input } => {
            for g in read_graphs(input.as_deref())? {
                write_graph6_line(out, &local_complement(&g, at)?)?;
            }
        }
        Command::Orbit { cap, input } => {
            let g = read_one(input.as_deref())?;
            let orbit = lc_orbit(&g, cap)?;
            for h in &orbit.graphs {
                write_graph6_line(out, h)?;
            }
            if orbit.truncated {
                eprintln!("undecided: orbit truncated after {} graphs", orbit.len());
                return Ok(Status::Undecided);
            }
        }
        Command::Vm {
            minor,
            host,
            search,
        } => {
            let h = read_one(Some(&minor))?;
            let g = read_one(Some(&host))?;
            let config = search.config()?;
            match is_vertex_minor_capped(&h, &g, config.strategy, config.cap)? {
                Containment::Present(w) => {
                    writeln!(out, "present")?;
                    write!(out, "{w}")?;
                }
                Containment::Absent => writeln!(out, "absent")?,
                Containment::Undecided { states } => {
                    writeln!(out, "undecided (truncated after {states} states)")?;
                    return Ok(Status::Undecided);
                }
            }
        }
        Command::Cutrank { set, input } => {
            let x = parse_set(&set)?;
            for g in read_graphs(input.as_deref())? {
                let p = cross_twin_blocks(&g, &x)?;
                writeln!(out, "rank {} X={} V-X={}", p.rank, p.set, p.complement)?;
                let list = |b: &[VertexSet]| {
                    b.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(out, "blocks {}", list(&p.blocks))?;
                writeln!(out, "co-blocks {}", list(&p.co_blocks))?;
                if let Some(best) = p.best_block_pair() {
                    writeln!(out, "best {best}")?;
                }
            }
        }
        Command::Pair { mode, input } => {
            for g in read_graphs(input.as_deref())? {
                let r = max_balanced_homogeneous_pair(&g, mode)?;
                let tag = if r.optimal { "optimal" } else { "lower-bound" };
                writeln!(out, "{} {tag}", r.pair)?;
            }
        }
        Command::Dichotomy { delta, input } => {
            for g in read_graphs(input.as_deref())? {
                match degree_dichotomy(&g, delta) {
                    DichotomyFinding::Sparse {
                        edge_count,
                        max_degree,
                        edge_bound,
                    } => writeln!(
                        out,
                        "sparse n={} delta={delta} max_degree={max_degree} edges={edge_count} bound={edge_bound}",
                        g.n()
                    )?,
                    DichotomyFinding::Dense {
                        vertex,
                        degree,
                        neighborhood,
                        labels,
                        neighborhood_complement,
                    } => writeln!(
                        out,
                        "dense n={} delta={delta} v={vertex} degree={degree} N={} G'={} complement={}",
                        g.n(),
                        labels.into_iter().collect::<VertexSet>(),
                        write_graph6(&neighborhood)?,
                        write_graph6(&neighborhood_complement)?
                    )?,
                }
            }
        }
        Command::Filter {
            minor,
            search,
            input,
        } => {
            let h = read_one(Some(&minor))?;
            let summary = filter_h_free(
                open(input.as_deref())?,
                &h,
                search.config()?,
                out,
                &mut io::stderr(),
            )?;
            eprintln!(
                "read {}, passed {}, rejected {}, undecided {}, malformed {}",
                summary.read,
                summary.passed,
                summary.rejected,
                summary.undecided,
                summary.malformed
            );
            if summary.malformed > 0 {
                bail!("{} malformed input lines", summary.malformed);
            }
            if summary.undecided > 0 {
                return Ok(Status::Undecided);
            }
        }
        Command::Scan {
            minor,
            n,
            input,
            format,
            search,
        } => {
            let h = read_one(Some(&minor))?;
            let graphs = match &input {
                Some(p) => read_graphs(Some(p))?,
                None => {
                    if *n.end() > ENUMERATION_LIMIT {
                        bail!(
                            "built-in enumeration stops at {ENUMERATION_LIMIT} vertices; pass --input with a graph6 stream"
                        );
                    }
                    let mut all = Vec::new();
                    for m in n.clone() {
                        all.extend(enumerate_graphs(m)?);
                    }
                    all
                }
            };
            let report = epsilon_scan(graphs, &h, n, search.config()?)?;
            match format {
                Format::Csv => write!(out, "{}", report.to_csv())?,
                Format::Text => write!(out, "{}", report.to_text())?,
            }
            if report.rows.iter().any(|r| r.truncated_count > 0) {
                return Ok(Status::Undecided);
            }
        }
        Command::Enumerate { n } => {
            for g in enumerate_graphs(n)? {
                write_graph6_line(out, &g)?;
            }
        }
    }
    Ok(Status::Decided)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|s| {
        out.flush()?;
        Ok(s)
    });
    match result {
        Ok(Status::Decided) => ExitCode::SUCCESS,
        Ok(Status::Undecided) => ExitCode::from(2),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
