use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("expected {expected} subdivision counts (one per edge), got {got}")]
    SubdivisionCounts { expected: usize, got: usize },

    #[error("{what} supports at most {limit} vertices, graph has {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("graph6: {kind} at byte offset {offset}")]
    Graph6 {
        offset: usize,
        kind: Graph6ErrorKind,
    },

    #[error("cannot smooth vertex {vertex}: degree is {degree}, expected 2")]
    NotDegreeTwo { vertex: usize, degree: usize },

    #[error("cannot smooth vertex {vertex}: its neighbors {a} and {b} are adjacent")]
    NeighborsAdjacent { vertex: usize, a: usize, b: usize },

    #[error("sets overlap at vertex {0}")]
    Overlap(usize),

    #[error("the sets do not form a {0} pair")]
    NotHomogeneous(String),

    #[error("delta must lie strictly between 0 and 1, got {0}")]
    DeltaOutOfRange(String),

    #[error("orbit cap must be at least 1")]
    ZeroCap,

    #[error("witness text, line {line}: {msg}")]
    WitnessFormat { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    ByteOutOfRange(u8),
    #[error("truncated header")]
    TruncatedHeader,
    #[error("36-bit size header is not supported")]
    UnsupportedHeader,
    #[error("non-canonical size header")]
    NonCanonicalHeader,
    #[error("truncated body: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("trailing bytes after body")]
    TrailingBytes,
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("graph too large for graph6 (n = {0})")]
    TooManyVertices(usize),
}
