//! Desk-scale structural graph theory toolkit: separations and tangles,
//! grids and their natural tangles, minor models and tangle extension,
//! vortex decompositions with linkages and combs, rotation-system
//! embeddings, and near-embedding certificate checking.
//!
//! Everything here is built for exhaustive verification on small instances.
//! Enumeration-style operations take explicit caps and refuse larger inputs
//! instead of silently running forever.

#![forbid(unsafe_code)]

pub mod constants;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod grid;
pub mod menger;
pub mod minor;
pub mod nearembed;
pub mod separation;
pub mod surface;
pub mod tangle;
pub mod verify;
pub mod vortex;

mod exec;

pub use error::{Error, Result};
pub use graph::{Graph, Path, Subgraph, VertexSet};
pub use separation::Separation;

/// Default cap on |V| for exhaustive enumeration (subset searches).
pub const DEFAULT_VERTEX_CAP: usize = 16;

/// Default cap on |V(host)| for brute-force minor search.
pub const DEFAULT_MINOR_HOST_CAP: usize = 14;

/// Default cap on |V(pattern)| for brute-force minor search.
pub const DEFAULT_MINOR_PATTERN_CAP: usize = 6;
