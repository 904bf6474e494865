//! Quasi-isometry invariants of graph products of finite groups.
//!
//! A graph product is described by a finite simplicial graph whose vertices
//! carry finite (cyclic) groups. This crate decides the combinatorial
//! invariants attached to it (induced squares, square-complete closures,
//! minsquare subgraphs, the minimal peripheral structure for relative
//! hyperbolicity, hyperbolicity of the electrification, the Morse-subgroup
//! dichotomy) and checks them against explicit geometry: an exact word
//! problem solver and finite balls of the Cayley graph.

pub mod compare;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod iso;
pub mod parse;
pub mod relhyp;
pub mod report;
pub mod squares;
pub mod vertex_set;
pub mod word;

pub use error::{Error, ParseError, Result};
pub use graph::{CoreDecomposition, InducedSquare, SimplicialGraph};
pub use parse::parse_graph;
pub use vertex_set::VertexSet;
pub use word::{GraphProduct, NormalForm, Syllable, Word};

/// Version recorded in analysis reports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
