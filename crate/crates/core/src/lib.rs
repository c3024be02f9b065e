//! Graph operations around vertex-minors and homogeneous pairs.
//!
//! * [`graph`]: immutable simple graphs, induced subgraphs, complements,
//!   subdivisions.
//! * [`graph6`]: bit-exact graph6 reading and writing.
//! * [`lc`]: local complementation, LC orbits, degree-2 smoothing.
//! * [`vertex_minor`]: containment search with replayable witnesses.
//! * [`cut_rank`]: GF(2) cut-rank and twin blocks across a cut.
//! * [`pairs`]: complete / anticomplete pairs, maximum balanced pair,
//!   clique and independence numbers.
//! * [`enumerate`]: small graphs up to isomorphism.
//! * [`harness`]: filtering, epsilon scans, degree dichotomy.

pub mod cut_rank;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod lc;
pub mod pairs;
pub mod vertex_minor;

pub use error::{Error, Graph6ErrorKind, Result};
pub use graph::{Graph, VertexSet};
