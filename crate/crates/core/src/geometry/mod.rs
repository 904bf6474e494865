//! Finite pieces of the quasi-median Cayley graph: balls (optionally
//! electrified), hyperplanes named by their carrier cosets, and flat grids.

pub mod ball;
pub mod flat;
pub mod hyperplane;

pub use ball::{electrified_distance, BallEdge, CayleyBall, ConeClass, ElectrifiedDistance, DEFAULT_VERTEX_CAP};
pub use flat::FlatGrid;
pub use hyperplane::HyperplaneId;

use crate::graph::SimplicialGraph;

/// A graph product is essential iff its graph is not the star of one of its
/// vertices.
pub fn is_essential(graph: &SimplicialGraph) -> bool {
    !graph.is_star_of_vertex(graph.all())
}
