//! Workbench for crossing numbers of small hypercube variants.
//!
//! The crate is organised as a set of cooperating modules:
//!
//! - [`graph`]: simple undirected graphs, induced subgraphs, cuts,
//!   isomorphism and automorphism search, planarity testing with
//!   combinatorial embeddings and Kuratowski witnesses.
//! - [`cube`]: generators for `Q_n`, crossed cubes `CQ_n`, locally twisted
//!   cubes `LTQ_n` and the two Möbius cube variants `0-MQ_n` / `1-MQ_n`.
//! - [`lemmas`]: exhaustive checkers for the cut and partition inequalities
//!   satisfied by the order-3 cubes, with counterexample witnesses.
//! - [`geometry`]: exact rational polyline drawings, crossing detection,
//!   good-drawing validation, face arrangements and SVG export.
//! - [`solver`]: crossing number lower bounds, exact branch-and-bound over
//!   planarizations, an edge-insertion heuristic and certificate realization.
//! - [`io`]: text and JSON file formats used by the command line tool.

pub mod cube;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod lemmas;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSubset};
