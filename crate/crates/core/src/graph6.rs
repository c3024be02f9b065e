//! graph6 text encoding.
//!
//! A line is a size header followed by the upper triangle of the adjacency
//! matrix in column order `(0,1) (0,2) (1,2) (0,3) ...`, six bits per byte,
//! most significant bit first, each byte offset by 63. Sizes up to 62 use a
//! single header byte; sizes up to 258047 use byte 126 followed by three
//! 6-bit groups. The 36-bit form is rejected.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Graph6ErrorKind as Kind, Result};
use crate::graph::Graph;

/// Largest vertex count representable with the 18-bit header.
pub const MAX_VERTICES: usize = (1 << 18) - 1;

/// Optional stream header emitted by common generators.
pub const STREAM_HEADER: &str = ">>graph6<<";

const OFFSET: u8 = 63;

fn err(offset: usize, kind: Kind) -> Error {
    Error::Graph6 { offset, kind }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, Kind::Empty));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(i, Kind::ByteOutOfRange(bytes[i])));
    }

    let (n, start) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(err(1, Kind::UnsupportedHeader));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), Kind::TruncatedHeader));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        if n <= 62 {
            return Err(err(0, Kind::NonCanonicalHeader));
        }
        (n, 4)
    };

    let body = &bytes[start..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(err(
            bytes.len(),
            Kind::TruncatedBody {
                expected,
                found: body.len(),
            },
        ));
    }
    if body.len() > expected {
        return Err(err(start + expected, Kind::TrailingBytes));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    if total_bits % 6 != 0 {
        let last = body[expected - 1] - OFFSET;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + expected - 1, Kind::NonzeroPadding));
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for y in 1..n {
        for x in 0..y {
            let value = body[k / 6] - OFFSET;
            if value >> (5 - k % 6) & 1 == 1 {
                g.set_edge(x, y, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(err(0, Kind::TooManyVertices(n)));
    }
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for y in 1..n {
        for x in 0..y {
            acc = (acc << 1) | g.has_edge(x, y) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    // every byte is in 63..=126
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// One line of a graph6 stream: its 1-based line number and the decoded
/// graph or the parse error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamItem {
    pub line: usize,
    pub graph: Result<Graph>,
}

/// Reads a graph6 stream, one graph per line. Blank lines are skipped and a
/// leading `>>graph6<<` header (alone or prefixed to a line) is stripped.
pub struct Graph6Reader<R> {
    input: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(input: R) -> Self {
        Graph6Reader {
            input,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = io::Result<StreamItem>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.input.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
            self.line += 1;
            let mut text = self.buf.trim_end_matches(['\n', '\r']);
            if let Some(rest) = text.strip_prefix(STREAM_HEADER) {
                text = rest;
            }
            if text.is_empty() {
                continue;
            }
            return Some(Ok(StreamItem {
                line: self.line,
                graph: parse_graph6(text),
            }));
        }
    }
}

/// Writes `g` as one graph6 line.
pub fn write_graph6_line<W: Write + ?Sized>(out: &mut W, g: &Graph) -> io::Result<()> {
    let line = write_graph6(g).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
    writeln!(out, "{line}")
}
